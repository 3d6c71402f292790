"""Lower semi-frames, frames and Riesz-Fischer sequences on truncation ladders.

Sequences and operators on a separable Hilbert space are described
symbolically (weights, index maps, finite blocks) and realized on an
increasing ladder of finite sections.  Spectral quantities computed at each
level are classified by trend, giving three-valued verdicts for
completeness, the Bessel, frame, lower-semi-frame and Riesz-Fischer
properties, closedness and density of ranges, and the relative position of
analysis ranges in a direct sum.
"""

from .classification import (BoundsEstimate, LadderVerdict, bounds_at, classify,
                             classify_as_sequence, rf_check)
from .direct_sum import (DisjointnessReport, InternalSum, check_direct_sum_props, direct_sum,
                         disjointness, disjointness_at, embed_internal, taxonomy)
from .errors import (EmptySpan, InconclusiveLadder, InvalidBasis, InvalidMatrix, NotBessel,
                     ScenarioError, SemiframeError, ShapeError, TruncationOverflow,
                     UnknownProposition)
from .formulas import BlockPermutation, CompressedIndex, Expr, Periodic, parse_formula
from .ladder import Settings, Trajectory, Trend, TrendConfig, TruncationLadder, classify_trend
from .operators import (Adjoint, Compose, Diagonal, Identity, IdentityPlus,
                        PermutationWeighted, Sum, density_diagnostic, gamma_ladder,
                        norm_ladder, realize, spectral_report)
from .operators import Explicit as ExplicitOperator
from .propositions import PROPOSITION_IDS, PropositionCheck, Status, run_check
from .sequences import (DirectSum, OperatorImage, PointwiseSum, SequenceFamily, WeightedBasis,
                        assemble_triple, materialize, sequence_from_operator, standard_basis,
                        transformed_triple)
from .sequences import Explicit as ExplicitFamily
from .transforms import Mode, TransformPlan, apply_transform, check_sum_hypotheses

__version__ = "0.1.0"

__all__ = ["BoundsEstimate", "LadderVerdict", "bounds_at", "classify", "classify_as_sequence",
           "rf_check", "DisjointnessReport", "InternalSum", "check_direct_sum_props",
           "direct_sum", "disjointness", "disjointness_at", "embed_internal", "taxonomy",
           "EmptySpan", "InconclusiveLadder", "InvalidBasis", "InvalidMatrix", "NotBessel",
           "ScenarioError", "SemiframeError", "ShapeError", "TruncationOverflow",
           "UnknownProposition", "BlockPermutation", "CompressedIndex", "Expr", "Periodic",
           "parse_formula", "Settings", "Trajectory", "Trend", "TrendConfig",
           "TruncationLadder", "classify_trend", "Adjoint", "Compose", "Diagonal", "Identity",
           "IdentityPlus", "PermutationWeighted", "Sum", "density_diagnostic", "gamma_ladder",
           "norm_ladder", "realize", "spectral_report", "ExplicitOperator", "PROPOSITION_IDS",
           "PropositionCheck", "Status", "run_check", "DirectSum", "OperatorImage",
           "PointwiseSum", "SequenceFamily", "WeightedBasis", "assemble_triple", "materialize",
           "sequence_from_operator", "standard_basis", "transformed_triple", "ExplicitFamily",
           "Mode", "TransformPlan", "apply_transform", "check_sum_hypotheses", "__version__"]
