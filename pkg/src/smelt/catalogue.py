"""Static registry of the 14 data smells.

The registry is the single source of truth for smell keys, display names,
group membership, documentation text, and the mitigation strings that
findings carry. It is closed: detectors may only emit keys defined here.
"""

from __future__ import annotations

from dataclasses import dataclass

GROUP_ORDER = ("red", "cat", "misc", "miss", "str")

GROUP_NAMES = {
    "red": "Redundant value smells",
    "cat": "Categorical value smells",
    "misc": "Miscellaneous value smells",
    "miss": "Missing value smells",
    "str": "String value smells",
}


class UnknownSmellError(KeyError):
    """Raised when a smell key is not in the catalogue."""

    def __init__(self, key: str):
        valid = ", ".join(sorted(SMELL_KEYS))
        self.message = f"unknown smell key {key!r}; valid keys: {valid}"
        super().__init__(self.message)
        self.key = key

    def __str__(self) -> str:  # KeyError would wrap the message in quotes
        return self.message


@dataclass(frozen=True)
class SmellDescriptor:
    key: str
    name: str
    group: str
    group_name: str
    description: str
    rationale: str
    mitigation: str
    section: str  # anchor into docs/catalogue.md
    default_severity: str  # error | warning | info
    default_confidence: str  # high | medium | low


_SMELLS = (
    SmellDescriptor(
        key="red-corr",
        name="Correlated features",
        group="red",
        group_name=GROUP_NAMES["red"],
        description=(
            "Two numeric columns move together almost perfectly, so one of "
            "them adds nearly no information. Strong correlation usually "
            "means the same quantity was recorded twice in different forms "
            "(scaled, aggregated, or derived)."
        ),
        rationale=(
            "Redundant columns enlarge the feature space, slow training and "
            "storage, and destabilise models that assume independent inputs."
        ),
        mitigation=(
            "Review each flagged pair and keep only one column, or combine "
            "the pair into a single engineered feature; rerun feature "
            "selection after dropping."
        ),
        section="1.1",
        default_severity="warning",
        default_confidence="high",
    ),
    SmellDescriptor(
        key="red-dup",
        name="Duplicate examples",
        group="red",
        group_name=GROUP_NAMES["red"],
        description=(
            "Two or more rows are exactly identical once identifier columns "
            "are set aside: the same observation is counted multiple times."
        ),
        rationale=(
            "Repeated rows bias statistics toward the duplicated records and "
            "invite overfitting, since a model sees the same example once as "
            "an original and again as a copy. They also leak between train "
            "and test splits."
        ),
        mitigation=(
            "Deduplicate before splitting or training. For event or "
            "time-series data, where repeats can be legitimate, verify "
            "against a timestamp or sequence column before dropping."
        ),
        section="1.2",
        default_severity="warning",
        default_confidence="high",
    ),
    SmellDescriptor(
        key="red-uid",
        name="Unique identifiers",
        group="red",
        group_name=GROUP_NAMES["red"],
        description=(
            "A column holds a distinct value for every row, the signature of "
            "a database primary key rather than a measured property."
        ),
        rationale=(
            "Models can memorise identifiers and score well in training "
            "while learning nothing that generalises; identifiers also mask "
            "duplicate rows during cleaning."
        ),
        mitigation=(
            "Exclude identifier columns from the training features. Keep "
            "them for joins and provenance, and check whether repeated ids "
            "elsewhere (per owner, per account) could become a real feature."
        ),
        section="1.3",
        default_severity="warning",
        default_confidence="medium",
    ),
    SmellDescriptor(
        key="cat-bin",
        name="Binning categorical features",
        group="cat",
        group_name=GROUP_NAMES["cat"],
        description=(
            "A categorical column has a large number of distinct values, "
            "many of them rare. One-hot encoding it would explode the "
            "feature space."
        ),
        rationale=(
            "Hundreds of indicator columns cost memory, compute, and "
            "statistical power, and the rare categories receive almost no "
            "training signal."
        ),
        mitigation=(
            "Bin the values into broader groups before encoding (regions "
            "instead of neighbourhoods, families instead of species), or use "
            "frequency/target encoding for the long tail."
        ),
        section="2.1",
        default_severity="info",
        default_confidence="high",
    ),
    SmellDescriptor(
        key="cat-hierarchy",
        name="Hierarchy from label encoding",
        group="cat",
        group_name=GROUP_NAMES["cat"],
        description=(
            "A sensitive categorical column (sex, race, nationality, ...) is "
            "a candidate for label encoding, and integer codes impose an "
            "artificial ordering on values that have none."
        ),
        rationale=(
            "An arbitrary order over sensitive categories lets a model treat "
            "one group as numerically greater than another, producing skewed "
            "and discriminatory predictions."
        ),
        mitigation=(
            "Use one-hot (indicator) encoding for sensitive categoricals, or "
            "leave them out of training entirely. Reserve ordinal codes for "
            "columns with a genuine ranking, such as education level."
        ),
        section="2.2",
        default_severity="warning",
        default_confidence="medium",
    ),
    SmellDescriptor(
        key="misc-balance",
        name="Imbalanced examples",
        group="misc",
        group_name=GROUP_NAMES["misc"],
        description=(
            "One class in a low-cardinality column is drastically rarer than "
            "a uniform share would predict. When that column is the "
            "prediction target, accuracy becomes meaningless."
        ),
        rationale=(
            "A classifier can score highly by always predicting the majority "
            "class while never learning the minority one, which is often the "
            "class the application exists to catch."
        ),
        mitigation=(
            "Evaluate with precision/recall or per-class metrics rather than "
            "accuracy; consider resampling, class weights, or collecting "
            "more minority examples."
        ),
        section="3.1",
        default_severity="info",
        default_confidence="high",
    ),
    SmellDescriptor(
        key="misc-sensitive",
        name="Presence of sensitive features",
        group="misc",
        group_name=GROUP_NAMES["misc"],
        description=(
            "A column name indicates a protected personal attribute such as "
            "sex, race, religion, age, or marital status."
        ),
        rationale=(
            "Training on protected attributes bakes historical bias into "
            "predictions and may be unlawful in regulated domains; even "
            "keeping them in the table invites accidental use."
        ),
        mitigation=(
            "Exclude sensitive columns from training features, or apply "
            "fairness-aware techniques (constraints, reweighting, audits) "
            "when the attribute is genuinely required."
        ),
        section="3.2",
        default_severity="warning",
        default_confidence="medium",
    ),
    SmellDescriptor(
        key="misc-unit",
        name="Unknown unit of measure",
        group="misc",
        group_name=GROUP_NAMES["misc"],
        description=(
            "A numeric column is named after a physical or monetary quantity "
            "but neither the header nor the documentation reveals the unit "
            "it was measured in."
        ),
        rationale=(
            "If observations were recorded in mixed or unknown units, "
            "scaling, outlier checks, and engineered features silently "
            "produce wrong results."
        ),
        mitigation=(
            "State the unit in the column header (radius_mm, duration (min)) "
            "or in the data documentation, and confirm all rows were "
            "measured consistently."
        ),
        section="3.3",
        default_severity="info",
        default_confidence="low",
    ),
    SmellDescriptor(
        key="miss-bin",
        name="Binary missing values",
        group="miss",
        group_name=GROUP_NAMES["miss"],
        description=(
            "A column is mostly empty and every present value is the same "
            "positive token (Y, yes, true, 1). The blanks almost certainly "
            "mean the negative response rather than unknown."
        ),
        rationale=(
            "Treating these blanks as genuinely missing skews imputation and "
            "can discard most of the table, inverting what the column "
            "actually records."
        ),
        mitigation=(
            "Fill the blanks with the explicit negative response (N, false, "
            "0) after confirming the convention with the data owner, instead "
            "of dropping or imputing them."
        ),
        section="4.1",
        default_severity="warning",
        default_confidence="high",
    ),
    SmellDescriptor(
        key="miss-null",
        name="Missing values",
        group="miss",
        group_name=GROUP_NAMES["miss"],
        description=(
            "A large share of a column's cells are empty, so statistics "
            "computed from the remaining cells may not represent the full "
            "population."
        ),
        rationale=(
            "Most analysis tools skip nulls without warning, fitting "
            "summaries and models to a biased subsample; dropping incomplete "
            "rows can erase entire subgroups."
        ),
        mitigation=(
            "Investigate why the data is absent, then pick an explicit "
            "strategy: impute (mean/median/model-based), add missingness "
            "indicator columns, or document and drop."
        ),
        section="4.2",
        default_severity="warning",
        default_confidence="high",
    ),
    SmellDescriptor(
        key="miss-sp-val",
        name="Special missing values",
        group="miss",
        group_name=GROUP_NAMES["miss"],
        description=(
            "Missing data hides behind stand-in tokens: strings such as '?' "
            "or 'unknown', or implausible numbers such as -9999, instead of "
            "true nulls."
        ),
        rationale=(
            "Numeric stand-ins flow straight into means and models without "
            "raising any error, corrupting results invisibly; string "
            "stand-ins surface late as type failures."
        ),
        mitigation=(
            "Map every stand-in token to a real null at ingestion and "
            "document the convention; then re-run the missing-value checks, "
            "since true missingness is higher than it appears."
        ),
        section="4.3",
        default_severity="error",
        default_confidence="medium",
    ),
    SmellDescriptor(
        key="str-human",
        name="Strings in human-friendly formats",
        group="str",
        group_name=GROUP_NAMES["str"],
        description=(
            "A string column encodes quantities for human readers, numbers "
            "with unit words, and mixes more than one unit (for example "
            "'90 min' beside '2 Seasons')."
        ),
        rationale=(
            "The values cannot be mapped onto a single numeric scale "
            "mechanically; naive parsing would silently compare "
            "incomparable magnitudes."
        ),
        mitigation=(
            "Convert all values to one documented unit. Where the conversion "
            "factor is not fixed, the choice needs domain input; record the "
            "assumption that was used."
        ),
        section="5.1",
        default_severity="warning",
        default_confidence="high",
    ),
    SmellDescriptor(
        key="str-num",
        name="Numerical feature as string",
        group="str",
        group_name=GROUP_NAMES["str"],
        description=(
            "Nearly every value in a string column is numeric at heart: "
            "version strings like 1.1.9, formatted numbers like 1,234, or "
            "plain digits, yet the column types as text."
        ),
        rationale=(
            "Numeric information trapped in strings is invisible to scalers, "
            "correlation checks, and models until it is extracted."
        ),
        mitigation=(
            "Parse the embedded numbers into dedicated numeric columns (for "
            "example split versions into major/minor/patch parts, strip "
            "thousands separators); keep the raw string only if still "
            "needed."
        ),
        section="5.2",
        default_severity="warning",
        default_confidence="high",
    ),
    SmellDescriptor(
        key="str-sanitise",
        name="Strings with special characters",
        group="str",
        group_name=GROUP_NAMES["str"],
        description=(
            "Values in a string column differ only by surrounding whitespace "
            "or letter case, so the same category appears under several "
            "spellings."
        ),
        rationale=(
            "Analysis tools treat ' M' and 'M' as distinct categories, "
            "inflating cardinality, splitting group statistics, and breaking "
            "joins and filters."
        ),
        mitigation=(
            "Trim surrounding whitespace and normalise case at ingestion, "
            "then re-check the distinct values; add the cleanup to the "
            "pipeline so new data stays consistent."
        ),
        section="5.3",
        default_severity="warning",
        default_confidence="high",
    ),
)

_BY_KEY = {d.key: d for d in _SMELLS}

SMELL_KEYS = frozenset(_BY_KEY)

_GROUP_RANK = {g: i for i, g in enumerate(GROUP_ORDER)}


def list_smells() -> list[SmellDescriptor]:
    """All 14 descriptors, ordered by group, then key within the group."""
    return sorted(_SMELLS, key=lambda d: (_GROUP_RANK[d.group], d.key))


def describe(key: str) -> SmellDescriptor:
    """Look up one descriptor; raises UnknownSmellError for bad keys."""
    try:
        return _BY_KEY[key]
    except KeyError:
        raise UnknownSmellError(key) from None


def group_rank(group: str) -> int:
    return _GROUP_RANK[group]


def descriptor_as_dict(d: SmellDescriptor) -> dict:
    return {
        "key": d.key,
        "name": d.name,
        "group": d.group,
        "group_name": d.group_name,
        "description": d.description,
        "rationale": d.rationale,
        "mitigation": d.mitigation,
        "section": d.section,
        "default_severity": d.default_severity,
        "default_confidence": d.default_confidence,
    }
