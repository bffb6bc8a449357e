#!/usr/bin/env python

try:
    from setuptools import setup
    from setuptools import find_packages
except ImportError:
    raise ImportError("Could not import \"setuptools\". Please install the setuptools package.")


packages = find_packages(where=".", exclude=('tests', 'tests.*', 'bin', 'docs', 'conf'))

requires = []

with open('requirements.txt', 'r') as reqfile:
    for line in reqfile:
        line = line.strip()
        if line and not line.startswith(('pytest', 'coverage')):
            requires.append(line)

classifiers = (
    'Development Status :: 4 - Beta',
    'Environment :: Console',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: MIT License',
    'Natural Language :: English',
    'Operating System :: MacOS :: MacOS X',
    'Operating System :: POSIX :: Linux',
    'Programming Language :: Python :: 3',
    'Topic :: Scientific/Engineering :: Mathematics',
)

config = {
    "name": "coxinv",
    "version": "1.0",
    "description": "Chevalley mappings, jet transfer and invariant checks for finite reflection groups.",
    "author": "coxinv developers",
    "packages": packages,
    "install_requires": requires,
    "python_requires": ">=3.8",
    "classifiers": classifiers,
    "zip_safe": False,
    "scripts": ['bin/runcoxinv.py'],
    "entry_points": {"console_scripts": ["coxinv = coxinv.cli:main"]},
}

setup(**config)
