#! /usr/bin/env python3

import os

from setuptools import find_packages, setup

NAME = 'ReachHom'
VERSION = '0.3.0'
ISRELEASED = False

DESCRIPTION = 'Reachability homology of directed graphs'
README_FILE = os.path.join(os.path.dirname(__file__), 'README.txt')
LONG_DESCRIPTION = open(README_FILE).read()
LICENSE = 'GPLv3'

KEYWORDS = (
    'homology',
    'directed graphs',
    'reachability',
    'algebraic topology',
)

CLASSIFIERS = (
    'Development Status :: 3 - Alpha',
    'Environment :: Console',
    'Programming Language :: Python :: 3',
    'Intended Audience :: Science/Research',
    'Topic :: Scientific/Engineering :: Mathematics',
)

SETUP_REQUIRES = (
    'setuptools',
)

INSTALL_REQUIRES = (
    'numpy',
    'h5py',
    'networkx',
    'sympy>=1.12',
)

PACKAGES = find_packages(exclude=('_test', '_test.*', '*.tests', '*.tests.*', 'tests.*', 'tests'))

ENTRY_POINTS = {
    'console_scripts' : ("reachhom = reachhom.commands.rh_cli:main", ),
}

if __name__ == '__main__':
    setup(
          name = NAME,
          version = VERSION,
          description = DESCRIPTION,
          long_description = LONG_DESCRIPTION,
          license = LICENSE,
          keywords = KEYWORDS,
          classifiers = CLASSIFIERS,
          packages = PACKAGES,
          python_requires = '>=3.8',
          setup_requires = SETUP_REQUIRES,
          install_requires = INSTALL_REQUIRES,
          entry_points = ENTRY_POINTS,
          test_suite = '_test',
          include_package_data = True,
          zip_safe = False,
          )
