//! Law reports: named flags, one display label per flag, JSON and pretty
//! rendering.  `LAWS.md` at the repository root indexes every flag name.

use pairlab::comonadics::ComonadClass;
use pairlab::monadics::MonadClass;
use serde::Serialize;

/// Every flag any report can emit, with its display label.
pub const LAWS: &[(&str, &str)] = &[
    // algebra / monad
    ("assoc", "μ:FF→F is associative"),
    ("unit-regular", "η is regular"),
    ("unit-symmetric", "ϑ = ϑ̲"),
    ("mult-compatible", "μ:FF→F is compatible"),
    // coalgebra / comonad
    ("coassoc", "δ:G→GG is coassociative"),
    ("counit-regular", "ε is regular"),
    ("counit-symmetric", "γ = γ̲"),
    ("comult-compatible", "δ:G→GG is compatible"),
    // module / comodule
    ("action", "φ:FA→A is an action"),
    ("module-compatible", "φ is compatible (am = aem)"),
    ("coaction", "υ:A→GA is a coaction"),
    ("comodule-compatible", "υ is compatible"),
    // pairing
    ("alpha-regular", "αβα = α"),
    ("beta-regular", "βαβ = β"),
    ("alpha-symmetric", "ϑ = ϑ̲ for the induced monad"),
    ("beta-symmetric", "γ = γ̲ for the induced comonad"),
    // entwining of a monad with a functor / weak monad
    ("lift-equ", "exchanged action rectangle with unit absorption"),
    ("lift-equ-reg", "exchange map absorbs the target unit idempotent"),
    ("weak-diagrams", "plain rectangle and both absorption squares"),
    ("entwined-weak", "entwined product is a weak monad"),
    // entwining of a comonad with a functor / weak comonad
    ("lift-equ-co", "exchanged coaction rectangle with counit absorption"),
    ("lift-equ-reg-co", "exchange map absorbs the target counit idempotent"),
    ("weak-diagrams-co", "plain rectangle and both absorption squares (comonad side)"),
    ("entwined-weak-co", "entwined coproduct is a weak comonad"),
    // mixed distributive law
    ("mon-rect", "Gμ ∘ ωF ∘ Fω = ω ∘ μG"),
    ("mon-square", "ω ∘ ϑG = ω = Gϑ ∘ ω"),
    ("com-rect", "Gω ∘ ωG ∘ Fδ = δF ∘ ω"),
    ("com-square", "ω ∘ Fγ = ω = γF ∘ ω"),
    ("cond-ve", "εF ∘ ω = ϑ ∘ Fε"),
    ("eta-unit", "ω ∘ ηG = Gη ∘ γ"),
    ("counit-2", "μ ∘ FεF ∘ Fω ∘ FηG = εF ∘ ω"),
    ("unit-2", "GεF ∘ Gω ∘ GηG ∘ δ = ω ∘ ηG"),
    // enumeration oracles
    ("free-compatible", "free (co)modules are compatible"),
    ("pointwise-alpha-regular", "α is pointwise regular on test hom-sets"),
    ("pointwise-beta-regular", "β is pointwise regular on test hom-sets"),
    ("closed-form-regular", "closed-form regularity flags hold"),
    ("oracle-agrees", "enumeration oracle agrees with closed-form flags"),
];

pub fn display_name(flag: &str) -> &'static str {
    LAWS.iter()
        .find(|(name, _)| *name == flag)
        .map(|(_, display)| *display)
        .unwrap_or_else(|| panic!("flag `{flag}` missing from the law index"))
}

#[derive(Debug, Clone, Serialize)]
pub struct FlagEntry {
    pub name: String,
    pub display: &'static str,
    pub holds: bool,
    /// Is the flag part of the requested suite (and so decides the exit code)?
    pub required: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub instance: String,
    pub operation: String,
    pub kind: String,
    pub suite: String,
    pub flags: Vec<FlagEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<String>,
    #[serde(skip_serializing_if = "serde_json::Map::is_empty")]
    pub derived: serde_json::Map<String, serde_json::Value>,
    pub ok: bool,
}

impl Report {
    pub fn new(instance: &str, operation: &str, kind: &str, suite: &str) -> Self {
        Report {
            instance: instance.into(),
            operation: operation.into(),
            kind: kind.into(),
            suite: suite.into(),
            flags: Vec::new(),
            classification: None,
            witnesses: Vec::new(),
            derived: serde_json::Map::new(),
            ok: true,
        }
    }

    pub fn push(&mut self, name: &str, holds: bool, required: bool) {
        self.flags.push(FlagEntry {
            name: name.into(),
            display: display_name(name),
            holds,
            required,
        });
        if required && !holds {
            self.ok = false;
            self.witnesses.push(format!("law fails: {}", display_name(name)));
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            1
        }
    }

    pub fn emit(&self, pretty: bool) {
        if pretty {
            println!("{} {} ({}, suite {})", self.operation, self.instance, self.kind, self.suite);
            for f in &self.flags {
                let mark = if f.holds { "ok  " } else { "FAIL" };
                let req = if f.required { "" } else { "  (informational)" };
                println!("  [{mark}] {:<24} {}{req}", f.name, f.display);
            }
            if let Some(c) = &self.classification {
                println!("  classification: {c}");
            }
            for w in &self.witnesses {
                println!("  witness: {w}");
            }
            println!("  result: {}", if self.ok { "pass" } else { "violation" });
        } else {
            println!("{}", serde_json::to_string(self).expect("serializable"));
        }
    }
}

pub fn monad_class_name(c: MonadClass) -> &'static str {
    match c {
        MonadClass::QUnital => "q-unital",
        MonadClass::RUnital => "r-unital",
        MonadClass::WeakMonad => "weak-monad",
    }
}

pub fn comonad_class_name(c: ComonadClass) -> &'static str {
    match c {
        ComonadClass::QCounital => "q-counital",
        ComonadClass::RCounital => "r-counital",
        ComonadClass::WeakComonad => "weak-comonad",
    }
}
