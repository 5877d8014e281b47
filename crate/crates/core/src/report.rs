//! Serializable reports comparing computed results with the published values.
//!
//! Every report is built from deterministic computations and serializes with a
//! fixed field order, so its JSON is byte-stable across runs and thread counts.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::codes::{self, CodeError, CodeType, InnerProduct, InvarianceReport, LinearCode};
use crate::exactnum::CycNum;
use crate::invariants::{
    compare_forms, e_polynomial, is_invariant, molien_series, reynolds_dimensions,
    verify_generation, BivarPoly, Expression, FormComparison, GenerationCertificate, IdentityCheck,
    InvariantError, CERTIFICATE_TERMS,
};
use crate::matgroup::{FiniteMatrixGroup, GroupError, GroupName, Mat2};
use crate::reference;
use crate::scheme::{build_scheme, AssociationScheme, SchemeError};
use crate::terwilliger::{match_block_counts, MatchOutcome, TAlgebra, TerwilligerError};

/// Highest degree of the Reynolds-projector cross-check.
pub const REYNOLDS_MAX_DEGREE: u32 = 12;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
    #[error(transparent)]
    Terwilliger(#[from] TerwilligerError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

/// Runs `f` on a dedicated pool of `threads` workers (0 = rayon default).
pub fn with_threads<T: Send>(
    threads: usize,
    f: impl FnOnce() -> T + Send,
) -> Result<T, ReportError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| ReportError::ThreadPool(e.to_string()))?;
    Ok(pool.install(f))
}

/// One published claim next to the computed value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub published: String,
    pub computed: String,
    pub agrees: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Claim {
    fn new(published: impl ToString, computed: impl ToString) -> Self {
        let (published, computed) = (published.to_string(), computed.to_string());
        Claim {
            agrees: published == computed,
            published,
            computed,
            note: None,
        }
    }

    fn with_agreement(mut self, agrees: bool) -> Self {
        self.agrees = agrees;
        self
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

pub type PublishedAgrees = BTreeMap<String, Claim>;

fn list<T: ToString>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(T::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn sorted<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    let mut v = v.to_vec();
    v.sort();
    v
}

/// A group to analyse: one of the four built-ins or a user-supplied one.
#[derive(Clone, Debug)]
pub struct GroupInput {
    pub label: String,
    pub builtin: Option<GroupName>,
    pub group: FiniteMatrixGroup,
}

impl GroupInput {
    pub fn builtin(name: GroupName) -> Self {
        GroupInput {
            label: format!("G_{}", name.label()),
            builtin: Some(name),
            group: crate::matgroup::builtin_group(name),
        }
    }

    pub fn from_generators(
        label: &str,
        generators: &[Mat2],
        cap: usize,
    ) -> Result<Self, ReportError> {
        let group = crate::matgroup::generate_group(generators, cap)?;
        Ok(GroupInput {
            label: label.into(),
            builtin: None,
            group,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GroupInfo {
    pub group: String,
    pub order: usize,
    pub class_count: usize,
    pub class_sizes: Vec<usize>,
    pub representatives: Vec<[[String; 2]; 2]>,
    pub contains_minus_identity: bool,
    pub published_agrees: PublishedAgrees,
}

pub fn group_info(input: &GroupInput) -> GroupInfo {
    let g = &input.group;
    let classes = g.conjugacy_classes();
    let sizes = classes.sizes();
    let minus = Mat2::scalar(CycNum::from_int(-1));
    let mut claims = PublishedAgrees::new();
    if let Some(name) = input.builtin {
        let (order, count) = reference::order_and_classes(name);
        claims.insert("order".into(), Claim::new(order, g.order()));
        claims.insert("classCount".into(), Claim::new(count, classes.len()));
        claims.insert(
            "classSizeMultiset".into(),
            Claim::new(
                list(&sorted(&reference::class_sizes(name))),
                list(&sorted(&sizes)),
            ),
        );
    }
    GroupInfo {
        group: input.label.clone(),
        order: g.order(),
        class_count: classes.len(),
        class_sizes: sizes,
        representatives: classes
            .representatives
            .iter()
            .map(|&r| g.element(r).to_strings())
            .collect(),
        contains_minus_identity: g.index_of(&minus).is_some(),
        published_agrees: claims,
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SchemeReport {
    pub group: String,
    pub points: usize,
    pub class_count: usize,
    pub class_sizes: Vec<usize>,
    /// A_iA_j = Σ p_ij^k A_k and the counting formula were both checked during construction.
    pub bose_mesner_verified: bool,
    pub p_symmetric: bool,
    pub nonvanishing_triples: usize,
    pub dim_bound_lower: usize,
    pub dim_bound_upper: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intersection_numbers: Option<Vec<Vec<Vec<u32>>>>,
}

pub fn scheme_report(
    input: &GroupInput,
    scheme: &AssociationScheme,
    with_tensor: bool,
) -> SchemeReport {
    let d1 = scheme.class_count();
    let p_symmetric =
        (0..d1).all(|i| (0..d1).all(|j| (0..d1).all(|k| scheme.p(i, j, k) == scheme.p(j, i, k))));
    SchemeReport {
        group: input.label.clone(),
        points: scheme.order(),
        class_count: d1,
        class_sizes: scheme.classes().sizes(),
        bose_mesner_verified: true,
        p_symmetric,
        nonvanishing_triples: scheme.nonvanishing_triples(),
        dim_bound_lower: scheme.dimension_lower_bound(),
        dim_bound_upper: scheme.dimension_upper_bound(),
        intersection_numbers: with_tensor.then(|| scheme.intersection_numbers()),
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TableMatch {
    /// "matched", "mismatch" or "inconclusive".
    pub outcome: &'static str,
    /// `permutation[p]` is the computed class matched to published row p.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub published_total: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TerwilligerReport {
    pub group: String,
    pub order: usize,
    pub class_sizes: Vec<usize>,
    #[serde(rename = "dimT")]
    pub dim_t: usize,
    pub dim_bound_lower: usize,
    pub dim_bound_upper: usize,
    pub stabilization_depth: usize,
    pub spanning_depth: usize,
    pub rank_by_round: Vec<usize>,
    pub block_counts: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block_table: Option<TableMatch>,
    pub center_dim: usize,
    pub idempotent_field: &'static str,
    /// ε² = ε, ε_aε_b = 0, Σε = I and centrality were checked exactly.
    pub idempotents_verified: bool,
    pub degrees: Vec<usize>,
    pub degree_square_sum: usize,
    pub structure: String,
    pub published_agrees: PublishedAgrees,
}

fn structure_text(degrees: &[usize]) -> String {
    degrees
        .iter()
        .map(|d| format!("M{d}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn terwilliger_report(
    input: &GroupInput,
    scheme: &AssociationScheme,
    t: &TAlgebra,
) -> TerwilligerReport {
    let sizes = scheme.classes().sizes();
    let lower = scheme.dimension_lower_bound();
    let upper = scheme.dimension_upper_bound();
    let dim = t.dim();
    let square_sum: usize = t.degrees.iter().map(|d| d * d).sum();
    let mut claims = PublishedAgrees::new();
    let mut block_table = None;

    if let Some(name) = input.builtin {
        let published = reference::block_counts(name);
        let published_total: usize = published.iter().flatten().sum();
        let outcome = match_block_counts(
            &sizes,
            &t.block_counts,
            &reference::class_sizes(name),
            &published,
        );
        let m = match outcome {
            MatchOutcome::Matched(p) => TableMatch {
                outcome: "matched",
                permutation: Some(p),
                detail: None,
                published_total,
            },
            MatchOutcome::Mismatch(d) => TableMatch {
                outcome: "mismatch",
                permutation: None,
                detail: Some(d),
                published_total,
            },
            MatchOutcome::Inconclusive => TableMatch {
                outcome: "inconclusive",
                permutation: None,
                detail: Some("search budget exhausted".into()),
                published_total,
            },
        };

        let published_dim = reference::dimension(name);
        let printed_degrees = reference::degrees(name);
        let printed_square_sum: usize = printed_degrees.iter().map(|d| d * d).sum();

        let mut dim_claim = Claim::new(published_dim, dim);
        if !dim_claim.agrees {
            dim_claim = dim_claim.note(format!(
                "computed dimension equals the published block-count total ({published_total}), the sum of squares of the \
                 printed degrees ({printed_square_sum}) and the count of nonzero intersection numbers ({lower}); \
                 the printed value is inconsistent with these"
            ));
        }
        claims.insert("dimension".into(), dim_claim);

        let mut bounds = Claim::new(
            format!("{lower} <= dim <= {upper}"),
            format!("{lower} <= {dim} <= {upper}"),
        )
        .with_agreement(lower <= dim && dim <= upper);
        if matches!(name, GroupName::I | GroupName::IV) {
            bounds = Claim::new(format!("dim = {upper}"), format!("dim = {dim}"));
        }
        claims.insert("dimensionBounds".into(), bounds);

        claims.insert(
            "closureDepth".into(),
            Claim::new(reference::CLOSURE_DEPTH, t.stabilization_depth()).note(format!(
                "products of depth {} already span T; the depth-{} round adds nothing",
                t.closure.spanning_depth,
                t.stabilization_depth()
            )),
        );

        let table_agrees = m.outcome == "matched";
        let mut table_claim = Claim::new(
            "block-count table up to a simultaneous permutation",
            m.outcome,
        )
        .with_agreement(table_agrees);
        if let Some(d) = &m.detail {
            table_claim = table_claim.note(d.clone());
        }
        claims.insert("blockTable".into(), table_claim);
        let mut total_claim = Claim::new(published_total, dim);
        if published_total != published_dim {
            total_claim = total_claim.note(format!(
                "the printed table sums to {published_total}, not to the printed dimension {published_dim}"
            ));
        }
        claims.insert("blockTableTotal".into(), total_claim);
        block_table = Some(m);

        let mut center = Claim::new(reference::center_dimension(name), t.center_dim());
        if name == GroupName::IV {
            center = center.note("printed under a repeated G_III label; read as the G_IV entry");
        }
        claims.insert("centerDim".into(), center);

        let mut deg = Claim::new(list(&printed_degrees), list(&t.degrees));
        if name == GroupName::IV {
            deg = deg.note("printed under a repeated G_III label; read as the G_IV entry");
        }
        if !deg.agrees {
            deg = deg.note(format!(
                "computed degrees satisfy sum d^2 = {square_sum} = dim; the printed list gives {printed_square_sum}"
            ));
        }
        claims.insert("degrees".into(), deg);

        let mut squares = Claim::new(published_dim, printed_square_sum);
        if !squares.agrees {
            squares = squares.note(format!(
                "printed degrees square-sum to {printed_square_sum}, printed dimension is {published_dim}"
            ));
        }
        claims.insert("printedDegreesSquareSum".into(), squares);
    }

    TerwilligerReport {
        group: input.label.clone(),
        order: scheme.order(),
        class_sizes: sizes,
        dim_t: dim,
        dim_bound_lower: lower,
        dim_bound_upper: upper,
        stabilization_depth: t.stabilization_depth(),
        spanning_depth: t.closure.spanning_depth,
        rank_by_round: t.closure.rank_by_round.clone(),
        block_counts: t.block_counts.clone(),
        block_table,
        center_dim: t.center_dim(),
        idempotent_field: t.idempotents.field(),
        idempotents_verified: true,
        degrees: t.degrees.clone(),
        degree_square_sum: square_sum,
        structure: structure_text(&t.degrees),
        published_agrees: claims,
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SeriesReport {
    pub group: String,
    pub terms: usize,
    pub coefficients: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product_degrees: Option<(u32, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches_product: Option<bool>,
}

pub fn molien_report(input: &GroupInput, terms: usize) -> Result<SeriesReport, ReportError> {
    let series = molien_series(&input.group, terms)?;
    let (product_degrees, matches_product) = match input.builtin {
        Some(name) => {
            let (a, b) = reference::molien_degrees(name);
            let product = crate::invariants::expand_product_series(a as usize, b as usize, terms);
            (Some((a, b)), Some(product == series))
        }
        None => (None, None),
    };
    Ok(SeriesReport {
        group: input.label.clone(),
        terms,
        coefficients: series
            .coeffs()
            .iter()
            .map(crate::exactnum::format_rational)
            .collect(),
        product_degrees,
        matches_product,
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EPolyReport {
    pub group: String,
    pub k: u32,
    pub polynomial: String,
    pub invariant: bool,
}

pub fn epoly_report(input: &GroupInput, k: u32) -> Result<EPolyReport, ReportError> {
    let p = e_polynomial(&input.group, k)?;
    Ok(EPolyReport {
        group: input.label.clone(),
        k,
        invariant: is_invariant(&input.group, &p),
        polynomial: p.to_text(),
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PrintedFormCheck {
    pub printed_label: String,
    pub computed_label: String,
    pub comparison: FormComparison,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReynoldsCheck {
    pub max_degree: u32,
    pub dimensions: Vec<usize>,
    pub matches_molien: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InvariantsReport {
    pub group: String,
    pub order: usize,
    pub generators: Vec<String>,
    pub e_polynomials: Vec<String>,
    pub printed_forms: Vec<PrintedFormCheck>,
    pub printed_expressions: Vec<IdentityCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<GenerationCertificate>,
    pub molien: SeriesReport,
    pub reynolds: ReynoldsCheck,
    pub published_agrees: PublishedAgrees,
}

/// Evaluates a printed Σ c φ_a^m φ_b^n expression with the computed φ's.
fn printed_expression_check(
    name: &str,
    terms: &[(u32, u32, crate::exactnum::Rational)],
    target: &BivarPoly,
    phi_a: &BivarPoly,
    phi_b: &BivarPoly,
) -> IdentityCheck {
    let expr = Expression {
        terms: terms
            .iter()
            .map(|(m, n, c)| (*m, *n, CycNum::from_rational(c.clone())))
            .collect(),
    };
    let matches = expr.evaluate(phi_a, phi_b) == *target;
    IdentityCheck {
        name: name.into(),
        matches,
        detail: if matches {
            "exact expansion agrees".into()
        } else {
            "expansion differs from the target".into()
        },
    }
}

pub fn invariants_report(
    input: &GroupInput,
    terms: usize,
) -> Result<InvariantsReport, ReportError> {
    let g = &input.group;
    let molien = molien_report(input, terms)?;
    let reynolds_dims = reynolds_dimensions(g, REYNOLDS_MAX_DEGREE);
    let short = molien_series(g, REYNOLDS_MAX_DEGREE as usize + 1)?;
    let reynolds = ReynoldsCheck {
        max_degree: REYNOLDS_MAX_DEGREE,
        matches_molien: short.to_integers().is_some_and(|c| {
            c.iter()
                .zip(&reynolds_dims)
                .all(|(&m, &r)| usize::try_from(m).ok() == Some(r))
        }),
        dimensions: reynolds_dims,
    };
    let mut report = InvariantsReport {
        group: input.label.clone(),
        order: g.order(),
        generators: Vec::new(),
        e_polynomials: Vec::new(),
        printed_forms: Vec::new(),
        printed_expressions: Vec::new(),
        certificate: None,
        molien,
        reynolds,
        published_agrees: PublishedAgrees::new(),
    };
    let Some(name) = input.builtin else {
        return Ok(report);
    };

    let (a, b) = reference::molien_degrees(name);
    let phi_a = e_polynomial(g, a)?;
    let phi_b = e_polynomial(g, b)?;
    let (f, gg) = reference::invariant_generators(name);
    report.generators = vec![
        format!("f = {}", f.to_text()),
        format!("g = {}", gg.to_text()),
    ];
    report.e_polynomials = vec![
        format!("phi_{a} = {}", phi_a.to_text()),
        format!("phi_{b} = {}", phi_b.to_text()),
    ];

    for (form, (k, computed)) in reference::printed_e_polynomials(name)
        .iter()
        .zip([(a, &phi_a), (b, &phi_b)])
    {
        let check = PrintedFormCheck {
            printed_label: format!("phi_{}", form.label_degree),
            computed_label: format!("phi_{k}"),
            comparison: compare_forms(&format!("phi_{k}"), computed, &form.poly),
        };
        let key = format!("form.phi_{k}");
        let mut claim = Claim::new(&check.comparison.printed, &check.comparison.computed);
        if let Some(r) = &check.comparison.printed_over_computed {
            claim = claim.note(format!("printed form is {r} times the computed polynomial"));
        } else if !claim.agrees {
            claim = claim.note(format!(
                "coefficients differ: {}",
                check.comparison.differences.join("; ")
            ));
        }
        report.published_agrees.insert(key, claim);
        if form.label_degree != k {
            report.published_agrees.insert(
                format!("label.phi_{k}"),
                Claim::new(format!("phi_{}", form.label_degree), format!("phi_{k}")).note(format!(
                    "printed label phi_{} on a polynomial of degree {k}",
                    form.label_degree
                )),
            );
        }
        report.printed_forms.push(check);
    }

    let targets = [f.clone(), gg.clone()];
    for (expr_name, expr_terms) in reference::printed_generator_expressions(name) {
        let target = if expr_name.starts_with('f') {
            &targets[0]
        } else {
            &targets[1]
        };
        let check = printed_expression_check(expr_name, &expr_terms, target, &phi_a, &phi_b);
        report.published_agrees.insert(
            format!("identity.{}", &expr_name[..1]),
            Claim::new(expr_name, expr_name).with_agreement(check.matches),
        );
        report.printed_expressions.push(check);
    }

    let cert = verify_generation(&input.label, g, &phi_a, &phi_b, &[("f", f), ("g", gg)])?;
    report.published_agrees.insert(
        "generation".into(),
        Claim::new(
            format!("C[phi_{a}, phi_{b}]"),
            format!("C[phi_{a}, phi_{b}]"),
        )
        .with_agreement(cert.passed()),
    );
    report.published_agrees.insert(
        "molienProduct".into(),
        Claim::new(format!("1/((1-t^{a})(1-t^{b}))"), "molien series")
            .with_agreement(report.molien.matches_product == Some(true)),
    );
    report.certificate = Some(cert);
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CodeReport {
    pub name: String,
    pub q: u8,
    pub length: usize,
    pub dimension: usize,
    pub enumerator: String,
    pub weight_distribution: Vec<u64>,
    pub self_dual_euclidean: bool,
    pub self_dual_hermitian: bool,
    pub inner_product: InnerProduct,
    #[serde(rename = "type")]
    pub code_type: CodeType,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariance: Option<InvarianceReport>,
    /// Whether the enumerator equals the generator f printed for the matching group.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equals_printed_generator: Option<bool>,
}

impl CodeReport {
    pub fn passed(&self) -> bool {
        self.invariance
            .as_ref()
            .is_none_or(InvarianceReport::passed)
    }
}

pub fn code_report(
    name: &str,
    code: &LinearCode,
    form: InnerProduct,
) -> Result<CodeReport, ReportError> {
    let enumerator = code.weight_enumerator()?;
    let code_type = code.classify(form)?;
    let invariance = code_type
        .group()
        .map(|g| codes::invariance_under(&enumerator, g));
    let equals_printed_generator = code_type
        .group()
        .map(|g| reference::invariant_generators(g).0 == enumerator);
    Ok(CodeReport {
        name: name.into(),
        q: code.q(),
        length: code.length(),
        dimension: code.dimension(),
        enumerator: enumerator.to_text(),
        weight_distribution: code.weight_distribution()?,
        self_dual_euclidean: code.is_self_dual(InnerProduct::Euclidean),
        self_dual_hermitian: code.is_self_dual(InnerProduct::Hermitian),
        inner_product: form,
        code_type,
        invariance,
        equals_printed_generator,
    })
}

/// Inner product used for a fixture in the full report: Hermitian over F₄.
pub fn fixture_form(code: &LinearCode) -> InnerProduct {
    if code.q() == 4 {
        InnerProduct::Hermitian
    } else {
        InnerProduct::Euclidean
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GroupSection {
    pub group_info: GroupInfo,
    pub scheme: SchemeReport,
    pub terwilliger: TerwilligerReport,
    pub invariants: InvariantsReport,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyAllReport {
    pub groups: Vec<GroupSection>,
    pub codes: Vec<CodeReport>,
    /// Published claims that disagree with the computation.
    pub discrepancies: Vec<String>,
    /// Internal checks that failed; empty on a clean run.
    pub failures: Vec<String>,
}

impl VerifyAllReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn collect_discrepancies(group: &str, section: &str, map: &PublishedAgrees, out: &mut Vec<String>) {
    for (key, claim) in map.iter().filter(|(_, c)| !c.agrees) {
        let mut line = format!(
            "{group} {section}.{key}: published {} vs computed {}",
            claim.published, claim.computed
        );
        if let Some(n) = &claim.note {
            let _ = write!(line, " ({n})");
        }
        out.push(line);
    }
}

pub fn group_section(
    input: &GroupInput,
    terms: usize,
    max_depth: usize,
) -> Result<GroupSection, ReportError> {
    let scheme = build_scheme(input.group.clone())?;
    let t = TAlgebra::build(&scheme, max_depth)?;
    Ok(GroupSection {
        group_info: group_info(input),
        scheme: scheme_report(input, &scheme, false),
        terwilliger: terwilliger_report(input, &scheme, &t),
        invariants: invariants_report(input, terms)?,
    })
}

/// The complete verification report for the given groups, plus the code
/// fixtures whose type belongs to one of them.
pub fn verify_all(
    groups: &[GroupName],
    terms: usize,
    max_depth: usize,
) -> Result<VerifyAllReport, ReportError> {
    let mut sections = Vec::new();
    let mut discrepancies = Vec::new();
    let mut failures = Vec::new();
    for &name in groups {
        let input = GroupInput::builtin(name);
        let s = group_section(&input, terms, max_depth)?;
        let label = &input.label;
        collect_discrepancies(
            label,
            "groupInfo",
            &s.group_info.published_agrees,
            &mut discrepancies,
        );
        collect_discrepancies(
            label,
            "terwilliger",
            &s.terwilliger.published_agrees,
            &mut discrepancies,
        );
        collect_discrepancies(
            label,
            "invariants",
            &s.invariants.published_agrees,
            &mut discrepancies,
        );
        if !s.scheme.p_symmetric {
            failures.push(format!("{label}: intersection numbers not symmetric"));
        }
        let t = &s.terwilliger;
        if t.degree_square_sum != t.dim_t {
            failures.push(format!(
                "{label}: sum of squared degrees {} != dim {}",
                t.degree_square_sum, t.dim_t
            ));
        }
        if t.dim_t < t.dim_bound_lower || t.dim_t > t.dim_bound_upper {
            failures.push(format!("{label}: dim outside the bounds"));
        }
        if let Some(c) = &s.invariants.certificate {
            failures.extend(
                c.failures()
                    .into_iter()
                    .map(|f| format!("{label}: certificate leg {f} failed")),
            );
        }
        if s.invariants.molien.matches_product != Some(true) {
            failures.push(format!(
                "{label}: molien series differs from the product formula"
            ));
        }
        if !s.invariants.reynolds.matches_molien {
            failures.push(format!(
                "{label}: reynolds dimensions differ from the molien series"
            ));
        }
        sections.push(s);
    }
    let mut code_reports = Vec::new();
    for fixture in codes::fixtures::NAMES {
        let code = codes::fixtures::by_name(fixture).expect("listed fixture");
        let r = code_report(fixture, &code, fixture_form(&code))?;
        if !r.code_type.group().is_some_and(|g| groups.contains(&g)) {
            continue;
        }
        if !r.passed() {
            failures.push(format!(
                "code {fixture}: enumerator not fixed by the matching group"
            ));
        }
        code_reports.push(r);
    }
    Ok(VerifyAllReport {
        groups: sections,
        codes: code_reports,
        discrepancies,
        failures,
    })
}

/// Default number of series terms.
pub const DEFAULT_TERMS: usize = CERTIFICATE_TERMS;
