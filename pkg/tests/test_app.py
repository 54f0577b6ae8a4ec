import pytest

from harmony import Harmony, Identity, exception
from harmony.grid import Grid, Range
from harmony.identities import section2
from harmony.sequences import harmonic


def test_register_from_module(bare_app):
    import register_identities
    bare_app.register_from_module(register_identities)
    registered = bare_app.identities.values()
    assert register_identities.FirstOrderIsHarmonic in registered
    assert register_identities.SecondOrderSquares in registered
    assert register_identities.AbstractCustom not in registered
    assert len(bare_app.identities) == 2


def test_register_from_module_string(bare_app):
    bare_app.register_from_module('register_identities', package=__package__)
    assert set(bare_app.identities) == {'first_order_is_harmonic',
                                        'second_order_squares'}


def test_register_builtins(app):
    catalog = app.registry_catalog()
    assert len(catalog) >= 45
    ids = [entry['id'] for entry in catalog]
    assert ids == sorted(ids)
    assert len(set(ids)) == len(ids)
    assert all(entry['anchor'] for entry in catalog)
    assert all(entry['tags'] for entry in catalog)


def test_catalog_entry():
    entry = section2.CorId1.catalog_entry()
    assert entry['id'] == 'cor_id1'
    assert entry['title'] == 'Cor id1'
    assert entry['tags'] == ['section2']
    assert entry['grid'] == 'n=0..20, m=0..5'


def test_mandatory_identities_registered(app):
    for identity_id in ('main_id1', 'cor_id1', 'cor_id2', 'cor_id3',
                        'cor_id4', 'cor_id5', 'thm_kollar', 'thm_hyphar',
                        'lemma_czxfdu7', 'thm_suzj3to', 'thm_odd_id1',
                        'thm_xld8bhi', 'thm_k_weighted_half', 'thm_yycg1tg'):
        assert identity_id in app.identities


def test_select_by_tag(app):
    section4 = app.select('section4')
    assert section4
    assert all('section4' in cls.__tags__ for cls in section4)
    assert app.select('no_such_tag') == []


def test_register_idempotent(app):
    before = len(app.identities)
    app.register(section2.CorId1)
    assert len(app.identities) == before


def test_duplicate_id(app):
    class Impostor(Identity):
        __id__ = 'cor_id1'
        __anchor__ = 'H_n = H_n'
        grid = Grid(n=Range(0, 3))

        def lhs(self, n):
            return harmonic(n)

        def rhs(self, n):
            return harmonic(n)

    with pytest.raises(exception.RegistryError):
        app.register(Impostor)


def test_register_abstract(bare_app):
    with pytest.raises(exception.RegistryError):
        bare_app.register(Identity)


def test_identity_needs_grid_and_anchor():
    with pytest.raises(exception.ValidationError):
        class NoGrid(Identity):
            __anchor__ = 'x = x'

    with pytest.raises(exception.ValidationError):
        class NoAnchor(Identity):
            grid = Grid(n=Range(0, 3))


def test_unknown_identity(app):
    with pytest.raises(exception.RegistryError):
        app.identity('no_such')
    with pytest.raises(LookupError):
        app.verify_identity('no_such')


def test_identity_instance_gets_config():
    app = Harmony.with_builtins(bruteforce_ceiling=50)
    identity = app.identity('h_like_bruteforce')
    assert identity.bruteforce_ceiling == 50
    assert repr(identity) == '<HLikeBruteforce(h_like_bruteforce)>'
