#!/usr/bin/python3

from setuptools import setup

setup(
    name='DirichletLSA',
    version='0.1.0',
    packages=['dirichletlsa', 'dirichletlsa.test'],
    package_data={'dirichletlsa': ['data/*.txt']},
    scripts=[
        'bin/DirichletLSA.py',
    ],
    description='Lattice string approximation of nonlattice Dirichlet ' +
        'polynomials and their complex dimensions.',
    long_description=open('README.md').read(),
    install_requires=[
        "matplotlib >= 3.5",
        "mpmath >= 1.2",
        "numpy >= 1.21",
        "scipy >= 1.8",
        "sympy >= 1.10",
    ],
    python_requires='>=3.9',
    platforms=['POSIX'],
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Operating System :: POSIX',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    tests_require=['pytest'],
)
