"""
decabracket - exact algebra for the quadratic Poisson brackets on P^5 built from
the four-ary product on the cohomology of line bundles over P^2.
"""

__version__ = "0.1.0"
