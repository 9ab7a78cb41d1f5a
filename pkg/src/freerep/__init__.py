"""freerep: exact computation with freely representable groups.

Decides free representability of finite groups, produces and verifies
norm-relation-of-unity certificates in Q[G], constructs exact cyclotomic
free representations, and reproduces the desk-scale structural
classification (Sylow-cycloidal types, MCC subgroups, SL2(F_p) census).
"""

from .groups import (
    Deadline,
    Group,
    Homomorphism,
    Subgroup,
    all_subgroups,
    build_group,
    count_nth_roots,
    is_isomorphic,
    quotient_group,
    structure_ops,
    subgroup_generated,
    sylow_subgroup,
)
from .constructors import (
    SemidirectParams,
    binary_polyhedral,
    cyclic,
    dihedral,
    direct_product,
    generalized_quaternion,
    sd,
    semidirect_cyclic,
    sl2,
)
from .classify import (
    ClassificationReport,
    FreelyRepresentableVerdict,
    classify,
    is_freely_representable,
    mcc_subgroup,
    odd_core,
)
from .normrel import (
    GroupAlgebraElement,
    NormRelationCertificate,
    find_norm_relation,
    norm_element,
    partition_relation,
    verify_certificate,
)
from .represent import (
    Representation,
    build_free_representation,
    induced_representation,
    quaternion_embedding_rep,
    scalar_representation,
    tensor_product_rep,
    verify_free,
)

__all__ = [
    "ClassificationReport",
    "FreelyRepresentableVerdict",
    "GroupAlgebraElement",
    "NormRelationCertificate",
    "Representation",
    "build_free_representation",
    "classify",
    "find_norm_relation",
    "induced_representation",
    "is_freely_representable",
    "mcc_subgroup",
    "norm_element",
    "odd_core",
    "partition_relation",
    "quaternion_embedding_rep",
    "scalar_representation",
    "tensor_product_rep",
    "verify_certificate",
    "verify_free",
    "Deadline",
    "Group",
    "Homomorphism",
    "Subgroup",
    "all_subgroups",
    "build_group",
    "count_nth_roots",
    "is_isomorphic",
    "quotient_group",
    "structure_ops",
    "subgroup_generated",
    "sylow_subgroup",
    "SemidirectParams",
    "binary_polyhedral",
    "cyclic",
    "dihedral",
    "direct_product",
    "generalized_quaternion",
    "sd",
    "semidirect_cyclic",
    "sl2",
]

__version__ = "0.1.0"
