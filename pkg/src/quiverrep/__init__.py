"""quiverrep: exact computations in categories of quiver representations.

Subpackages by layer:

- ``quiver``:    quiver combinatorics, cardinal invariants, rootedness
- ``basecat``:   exact base categories (Q / F_p vector spaces, finitely
                 generated abelian groups, nested representation bases)
- ``repcat``:    representations, morphisms, kernels/cokernels, hom spaces
- ``functors``:  free/cofree/stalk functors, adjunctions, mesh maps
- ``canonical``: canonical presentations and co-presentations
- ``homology``:  resolutions, Ext, projective dimension experiments
- ``cotorsion``: Phi/Psi classes, approximations, identity verification
- ``cli``:       command-line front end
"""

__version__ = "0.1.0"

from .cardinal import ALEPH0, ALEPH1, Cardinal, cardinal_size, finite
from .quiver import (Arrow, Budget, Path, Quiver, Verdict, boundary,
                     classify, explicit_quiver, invariant, is_rooted,
                     root_filtration, template)
from .basecat import (AbObj, FgAbBase, HomModule, MatMor, NestedBase,
                      VObj, VectBase, base_from_json)
from .repcat import (RepMorphism, Representation, direct_sum_rep,
                     cokernel_rep, hom_space_rep, image_rep, kernel_rep,
                     rand_rep, rep_from_json, rep_hom_solve, rep_to_json,
                     support_class, zero_rep)
from .functors import (CofreeRep, FreeRep, adjunction_transport, c_of,
                       cofree_rep, counit_psi, free_rep, k_of,
                       left_adjoint_of_f, path_transformation, phi_map,
                       psi_map, right_adjoint_of_g, stalk, unit_theta)
from .canonical import (CanonicalCopresentation, CanonicalPresentation,
                        RepSequence, canonical_copresentation,
                        canonical_presentation, path_length_filtration,
                        stalk_presentation)
from .homology import (ExtPresentation, ProjResolution, ext_rep,
                       gldim_experiment, is_projective_rep, nonsplit_witness,
                       pd_rep, projective_presentation,
                       projective_resolution)
from .cotorsion import (ApproxSequence, GroundPair, orthogonality,
                        phi_membership, psi_membership,
                        relative_support_check, special_phi_precover,
                        special_psi_preenvelope, verify_pair_identities)
