"""Semigroup primes of finite commutative rings, the spectral spaces they
form, and exhaustive desk-scale verification of the structure connecting
them to inverse-closed sets of prime ideals."""

from .correspondence import (ClassGroupProfile, DiagramReport, SurjectivityReport,
                             Verdict, dedekind_verdict, diagram_check, j_map,
                             jp_basic_open_report, jp_closure,
                             monotone_p_check, p_map,
                             prime_avoidance_j, ring_xspace,
                             smap_topological_report, spectral_map_of_hom,
                             surjectivity_report, union_of_primes)
from .errors import (InvalidParameter, InvalidSemigroup, InvariantViolation,
                     NotAHomomorphism, NotAPartialOrder, NotSpectral,
                     SpecprimeError, TooLarge)
from .posets import (DownSet, FinitePoset, PosetMap, SpectralReport,
                     TopologyPresentation, alexandrov_presentation, antichain,
                     chain, closure, diamond, fence, from_relation, phi,
                     phi_report, poset_map, verify_spectral, xfunctor, xspace)
from .rings import (FiniteRing, Ideal, RingHom, build_hom, build_poly_quotient,
                    build_product, build_zmod, compose_homs, enumerate_ideals,
                    ideal_generated, identity_hom, is_prime_ideal,
                    preimage_ideal, principal_ideal, radical, spec)
from .sprimes import (NO_INFIMUM, DensityReport, NoInfimum, Semigroup,
                      SemigroupPrime, SPrimeSpace, UFD_ZERO, UfdElement,
                      UfdModel, density_report, greatest_lower_bound,
                      hull_kernel_space, inf_sprimes, s_map, s_map_report,
                      sprimes_bruteforce, sprimes_from_spec, sup_sprimes,
                      ufd_model, ufd_report)

__version__ = "0.1.0"
