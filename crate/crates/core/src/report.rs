//! Law-violation reports shared by every validator.

use std::fmt;

/// The law a violation refers to. Names are stable and appear verbatim in
/// CLI reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    // categories
    SourceTarget,
    MissingComposite,
    SpuriousComposite,
    LeftIdentity,
    RightIdentity,
    Associativity,
    // functors and transformations
    FunctorBoundary,
    PreservesIdentity,
    PreservesComposition,
    ComponentBoundary,
    Naturality,
    // bicategories
    HomCategory,
    CompositionFunctor,
    CellBoundary,
    Invertibility,
    AssociatorNaturality,
    LeftUnitorNaturality,
    RightUnitorNaturality,
    Pentagon,
    Triangle,
    // lax functors
    HomFunctor,
    ConstraintNaturality,
    LaxAssociativity,
    LaxLeftUnit,
    LaxRightUnit,
    // icons
    Icon1,
    Icon2,
    // oplax transformations
    On0,
    On1,
    On2,
    // monoidal transformations
    MonoidalTensor,
    MonoidalUnit,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::SourceTarget => "source-target",
            Law::MissingComposite => "missing-composite",
            Law::SpuriousComposite => "spurious-composite",
            Law::LeftIdentity => "left-identity",
            Law::RightIdentity => "right-identity",
            Law::Associativity => "associativity",
            Law::FunctorBoundary => "functor-boundary",
            Law::PreservesIdentity => "preserves-identity",
            Law::PreservesComposition => "preserves-composition",
            Law::ComponentBoundary => "component-boundary",
            Law::Naturality => "naturality",
            Law::HomCategory => "hom-category",
            Law::CompositionFunctor => "composition-functor",
            Law::CellBoundary => "cell-boundary",
            Law::Invertibility => "invertibility",
            Law::AssociatorNaturality => "associator-naturality",
            Law::LeftUnitorNaturality => "left-unitor-naturality",
            Law::RightUnitorNaturality => "right-unitor-naturality",
            Law::Pentagon => "pentagon",
            Law::Triangle => "triangle",
            Law::HomFunctor => "hom-functor",
            Law::ConstraintNaturality => "constraint-naturality",
            Law::LaxAssociativity => "lax-associativity",
            Law::LaxLeftUnit => "lax-left-unit",
            Law::LaxRightUnit => "lax-right-unit",
            Law::Icon1 => "icon1",
            Law::Icon2 => "icon2",
            Law::On0 => "on0",
            Law::On1 => "on1",
            Law::On2 => "on2",
            Law::MonoidalTensor => "monoidal-tensor",
            Law::MonoidalUnit => "monoidal-unit",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One failed law instance together with the cells that witness it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: Law,
    pub witness: Vec<String>,
}

impl Violation {
    pub fn new(law: Law, witness: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Violation {
            law,
            witness: witness.into_iter().map(Into::into).collect(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at ({})", self.law, self.witness.join(", "))
    }
}

/// Ordered list of violations. Empty means every checked law holds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, law: Law, witness: impl IntoIterator<Item = impl Into<String>>) {
        self.violations.push(Violation::new(law, witness));
    }

    /// Appends `other`, prefixing every witness list with `context`.
    pub fn absorb(&mut self, context: &str, other: ValidationReport) {
        for mut v in other.violations {
            v.witness.insert(0, context.to_string());
            self.violations.push(v);
        }
    }

    pub fn has(&self, law: Law) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }

    pub fn first(&self, law: Law) -> Option<&Violation> {
        self.violations.iter().find(|v| v.law == law)
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
