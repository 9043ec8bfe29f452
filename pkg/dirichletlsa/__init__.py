"""DirichletLSA - lattice string approximation of Dirichlet polynomials.

This package provides:
   1. Exact classification of Dirichlet polynomials f(s) = 1 - sum m_j r_j^s
      (lattice or nonlattice, rank, genericity) and their dimension bounds.
   2. Simultaneous Diophantine approximation of the exponents by continued
      fractions and by an LLL-based stream.
   3. The lattice string approximations f_q, their regions of stability, the
      roots of f_q by a sparse multiprecision solver, and Newton refinement
      of those roots into roots of f.
   4. A command-line interface (bin/DirichletLSA.py) writing tables, CSV root
      lists and SVG plots.

"""

__all__ = ['numerics', 'cfrac', 'lll', 'dioph', 'dirichlet', 'roots', 'lsa',
    'catalogue', 'specfile', 'cli', 'ui', 'errors']

from dirichletlsa.lsa import LatticeStringApproximator
