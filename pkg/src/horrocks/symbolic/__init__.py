"""Exact polynomials in x, y, z, w, Groebner bases and explicit monad verification."""
from .groebner import groebner_basis, normal_form
from .monad import (Inconclusive, MalformedMonad, MonadPresentation, compose_is_zero,
                    degeneracy_locus_empty, h0_E, h1_E, section_matrix, verify_monad)
from .poly import HomPoly
