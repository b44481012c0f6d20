"""Schur multipliers, unitary cocycles and their covering groups for small finite groups."""

from .cocycles import (Cocycle, CocycleSpaces, class_decompose, class_order, classes_equal, coboundary,
                       coefficient_modulus, compute_spaces, inflation, restriction, unitarize)
from .constructions import (abelian, burnside23, cyclic, dihedral, direct_product, example_G, example_Gamma1,
                            example_Gamma2, extraspecial, generalized_quaternion, load_group, metacyclic,
                            quaternion8, save_group, semidirect)
from .extensions import (CentralExtension, example_extensions, extension_exponent, mu_cover, omega_product,
                         perp_quotient, plp_check, schur_cover, unitary_cover_exponent)
from .groups import FiniteGroup, GroupError, GroupSizeError, Subgroup
from .harness import Analyzer, VerificationReport, bounds_report, generate_corpus, run_suite
from .linalg import AbelianInvariants, SubgroupLattice, smith_normal_form
from .multiplier import schur_multiplier_homology, standard_map_image, standard_map_is_onto

__version__ = "0.1.0"
