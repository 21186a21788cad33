"""Continued fractions of quadratic irrationals over F_q((1/Y)).

Exact arithmetic throughout: finite fields and polynomials (``algebra``),
truncated Laurent series (``laurent``), canonical surds (``surd``), the
Artin map and periods (``cfe``), the natural extension (``natext``) and
Hecke-ray experiments with their measures (``hecke``).
"""

from .algebra import (FieldCtx, Fq, Poly, fq_ctx_make, fq_sqrt, parse_poly, poly_divmod, poly_gcd,
                      poly_is_irreducible, poly_squarefree_split)
from .cfe import (DegreeStats, PeriodicCfe, artin_step, cfe_expand, cfe_from_digits, cfe_period,
                  cfe_reduce, convergents, degree_stats)
from .hecke import (CylinderSpec, HeckeRow, MassConstants, cylinder_measure, escape_table, gamma_key,
                    hecke_neighbors, hecke_ray, hecke_walk_explore, mass_constants, nu_f, nu_lower_bound)
from .kernels import BACKEND, available_backends
from .laurent import Laurent, lau_int_frac, lau_inv, lau_sqrt, lau_vinf
from .natext import (AtomicMeasure, F_of_periodic_orbit, NatExtPair, coding_window, first_return_time,
                     natext_step, natext_unstep, pair_make)
from .surd import (Moebius, QuadElement, Surd, parse_surd, surd_canonicalize, surd_conjugate, surd_integral_part,
                   surd_moebius, surd_to_laurent, surd_trace_norm)

__version__ = '0.1.0'
