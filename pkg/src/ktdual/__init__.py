"""Exact equivariant K-theory of complex projective spaces.

K^0_G(CP(V)) is presented as R(G)[z]/chi(V z) over the representation ring of a
finite group, with the duality pairing <x, w> = epsilon(x w) against the
fundamental class, dual and flag bases, and invariant suites checking them.
"""
from .cyclo import CyclotomicNumber, zeta
from .groups import (
    CharacterTableError,
    FiniteGroupData,
    SubgroupEmbedding,
    cyclic_subgroup_embeddings,
    load_character_table,
    make_cyclic,
    make_dihedral,
    make_product,
    make_quaternion,
    make_symmetric3,
    make_symmetric4,
    resolve_group,
)
from .repring import VirtualCharacter, det_rep, exterior, parse_rep, restrict
from .ktheory import (
    KClass,
    KContext,
    KHomologyClass,
    LaurentPolynomial,
    context_for,
    epsilon,
    euler_class,
    fundamental_class,
    gram_matrix,
    pairing,
    poincare_dual,
    reduce,
    sigma_coefficients,
    verify_perfect,
)

__version__ = "0.1.0"
