"""prefcheck: exact-arithmetic verification of preference axioms on mixture spaces."""

from .axioms import ALL_AXIOMS, AxiomEngine, AxiomId, Universe
from .catalog import ENTRY_IDS, load_entry, run_catalog
from .intervals import Interval, SectionSet, analyze, complement, intersect, normalize, union
from .relations import (
    ComparisonOutcome,
    Label,
    LabeledPartition,
    MultiUtility,
    RelationModel,
    classify_segment,
    compare,
    section,
)
from .representation import calibrate, verify_representation
from .spaces import (
    MixtureSpace,
    Point,
    RealInterval,
    Simplex,
    SplitSpace,
    check_c1_c2,
    check_mixture_axioms,
    mix,
    pt,
    quotient,
    split_a,
    split_b,
)
from .theorems import THEOREMS, HarnessReport, lemma1_suite, run_harness
from .verdicts import AxiomVerdict, Status

__all__ = [
    "ALL_AXIOMS", "AxiomEngine", "AxiomId", "Universe",
    "ENTRY_IDS", "load_entry", "run_catalog",
    "Interval", "SectionSet", "analyze", "complement", "intersect",
    "normalize", "union",
    "ComparisonOutcome", "Label", "LabeledPartition", "MultiUtility",
    "RelationModel", "classify_segment", "compare", "section",
    "calibrate", "verify_representation",
    "MixtureSpace", "Point", "RealInterval", "Simplex", "SplitSpace",
    "check_c1_c2", "check_mixture_axioms", "mix", "pt", "quotient",
    "split_a", "split_b",
    "THEOREMS", "HarnessReport", "lemma1_suite", "run_harness",
    "AxiomVerdict", "Status",
]

__version__ = "0.1.0"
