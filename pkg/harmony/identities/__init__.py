from harmony.identities.base import Identity, IdentityMeta

# Modules registered by Harmony.register_builtins
BUILTIN_MODULES = (
    'harmony.identities.section1',
    'harmony.identities.section2',
    'harmony.identities.section3',
    'harmony.identities.section4',
)

__all__ = ('Identity', 'IdentityMeta', 'BUILTIN_MODULES')
