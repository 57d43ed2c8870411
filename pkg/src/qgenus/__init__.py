"""qgenus: exact arithmetic for positive definite binary quadratic forms.

Class groups under Gauss composition, genus theory with assigned characters,
theta series by lattice enumeration, eta quotients and Lambert series as
exact integer q-expansions, and a harness that verifies a registry of
classical identities by coefficient comparison.
"""

from .arith import kronecker
from .forms import (
    DiscriminantInfo,
    QuadForm,
    class_number,
    class_number_lift,
    compose,
    discriminant,
    discriminant_info,
    enumerate_reduced_forms,
    form_inverse,
    idoneal_discriminants,
    is_fundamental,
    principal_form,
    reduce_form,
    unit_count,
    validate,
)
from .genus import (
    AssignedCharacter,
    Genus,
    GenusPartition,
    LiftSet,
    assigned_characters,
    buell_lift,
    character_vector,
    genus_count_ratio,
    genus_partition,
    num_genera,
    phi_correspondence,
    psi_lift,
    represented_coprime_residues,
)
from .lambert import (
    CharacterSpec,
    LambertSpec,
    PrimePowerTable,
    l1_series,
    l2_series,
    lambert_expand,
    load_series_config,
    multiplicative_eval,
    named_series_expand,
    rep_formula,
    twisted_divisor_series,
)
from .series import (
    EtaFactor,
    EtaQuotientSpec,
    PowerSeries,
    eta_quotient,
    euler_series,
    phi_series,
    project,
    psi_series,
    theta_series,
)
from .verify import (
    VerificationReport,
    build_registry,
    run_all,
    run_case,
    verify_section2,
    verify_section5,
    verify_theorem1,
)

__version__ = "0.1.0"
