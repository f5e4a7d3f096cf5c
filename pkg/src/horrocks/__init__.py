"""Classification pipeline for minimal Horrocks monads of stable rank 2 bundles on P^3 with c1 = -1."""
from .candidates import (Candidate, MonadShape, RhoProfile, Rule, Status, Verdict, aa1_shape,
                         eliminate, extend_shape, negative_candidates, positive_candidates,
                         rho_bounds, solve_b)
from .cohomology import (CurveUnionSpec, Spectrum, euler_char_rank2, h0_p3, hom_dim,
                         plane_union_omega_dim, rational_quadric_omega_dim, spectrum_h1,
                         spectrum_h2)
from .moduli import (DimensionReport, component_separation, dimension_report, dimension_table,
                     homotopy_free)
from .spectra import enumerate_spectra, validate_spectrum
from .tables import classify, classify_negative, known_table

__version__ = "0.1.0"
