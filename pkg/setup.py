"""Exact harmonic-like numbers and mechanical verification of their identities."""

import os

from setuptools import find_packages, setup

tests_require = [
    'check-manifest>=0.25',
    'coverage>=4.0',
    'isort>=4.2.2',
    'pydocstyle>=1.0.0',
    'pytest-asyncio>=0.10.0',
    'pytest-cov>=2.5.1',
    'pytest>=3.2.1',
]

extras_require = {
    'docs': [
        'Sphinx>=1.6.3',
        'alabaster>=0.7.10',
    ],
    'tests': tests_require,
}

extras_require['all'] = []
for name, reqs in extras_require.items():
    extras_require['all'].extend(reqs)

setup_requires = [
    'pytest-runner>=2.6.2',
]

install_requires = [
    'inflection>=0.3.1',
    'PyYAML>=3.12',
]

packages = find_packages(exclude=['tests', 'examples', 'examples.*'])

# Get the version string. Cannot be done with import!
g = {}
with open(os.path.join('harmony', 'version.py'), 'rt') as fp:
    exec(fp.read(), g)
    version = g['__version__']

setup(
    name='harmony',
    version=version,
    license='Apache License 2.0',
    description=__doc__,
    packages=packages,
    python_requires='>=3.8',
    install_requires=install_requires,
    extras_require=extras_require,
    test_suite='tests',
    setup_requires=setup_requires,
    tests_require=tests_require,
    entry_points={
        'console_scripts': [
            'harmony = harmony.cli:main',
        ],
    },
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
