use serde::{Deserialize, Serialize};

/// One rule the classifier applies, with a short statement of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rule {
    pub id: &'static str,
    pub statement: &'static str,
}

/// Every rule a trace may cite.
pub const RULES: &[Rule] = &[
    Rule { id: "theta-sequence", statement: "Θ_n is bP_{n+1} extended by the stable stem modulo im J: Θ_7 = Z/28, Θ_8 = Z/2, Θ_9 = (Z/2)^3 with bP_10 = Z/2, Θ_10 = Z/6" },
    Rule { id: "concordance-7", statement: "closed smooth 7-manifold: C(M) = H^7(M;Z/28)" },
    Rule { id: "concordance-8", statement: "closed smooth 8-manifold: C(M) = H^7(M;Z/28) ⊕ H^8(M;Z/2)" },
    Rule { id: "concordance-9-spin", statement: "closed oriented spin 9-manifold: C(M) = H^7(M;Z/28) ⊕ H^8(M;Z/2) ⊕ H^9(M;Z/2)^3" },
    Rule { id: "concordance-9-sq2d2", statement: "closed oriented non-spin 9-manifold with Sq^2 d_2 ≠ 0 on H^6(M;Z/4): C(M) = H^7(M;Z/28) ⊕ H^8(M;Z/2) ⊕ H^9(M;Z/2)" },
    Rule { id: "concordance-9-split", statement: "closed oriented non-spin 9-manifold with Sq^2 d_2 = 0: C(M) = H^7(M;Z/7) ⊕ H^8(M;Z/2) ⊕ H^9(M;Z/2) ⊕ K̃ ⊕ Ã" },
    Rule { id: "concordance-10-phi0-psi0", statement: "closed spin 10-manifold, H_1 = 0, Φ = 0, ψ = 0: C(M) = H^7(M;Z/7) ⊕ H^8(M;Z/2) ⊕ H^9(M;Z/2) ⊕ H^10(M;Z/3) ⊕ H^10(M;Z/2) ⊕ H^7(M;Z/4)" },
    Rule { id: "concordance-10-phi0-psi1", statement: "closed spin 10-manifold, H_1 = 0, Φ = 0, ψ ≠ 0: C(M) = H^7(M;Z/7) ⊕ H^8(M;Z/2) ⊕ H^9(M;Z/2) ⊕ H^10(M;Z/3) ⊕ K̃ ⊕ Ã" },
    Rule { id: "concordance-10-phi1", statement: "closed spin 10-manifold, H_1 = 0, Φ ≠ 0: C(M) = H^7(M;Z/28) ⊕ H^8(M;Z/2) ⊕ H^9(M;Z/2) ⊕ H^10(M;Z/3)" },
    Rule { id: "concordance-10-nonspin", statement: "closed non-spin 10-manifold, H_1 = 0: C(M) = H^7(M;Z/7) ⊕ H^10(M;Z/3) ⊕ ker(Sq^2 on H^8(M;Z/2)) ⊕ ker(Sq^2 d_2 on H^7(M;Z/4))" },
    Rule { id: "splitting-assumption", statement: "K̃ ⊕ A = H^7(M;Z/4) with A = Z/4 when some q-preimage of a class w with Sq^2 w ≠ 0 has order 4, else A = Z/2; Ã is the cyclic extension of A by Z/2" },
    Rule { id: "concordance-inertia-8", statement: "closed 8-manifold: I_c(M) = 0" },
    Rule { id: "concordance-inertia-9", statement: "closed oriented 9-manifold: I_c = 0 if spin, Z/2⟨η∘ε⟩ if non-spin with Sq^2 d_2 = 0, Z/2⟨η∘ε⟩ ⊕ Z/2⟨μ⟩ if Sq^2 d_2 ≠ 0" },
    Rule { id: "concordance-inertia-10", statement: "closed simply connected 10-manifold: I_c = 0 if spin with Φ = 0, else Z/2⟨η∘μ⟩" },
    Rule { id: "homotopy-inertia-8", statement: "closed 8-manifold: I_h(M) = 0" },
    Rule { id: "homotopy-inertia-9-spin", statement: "closed oriented spin 9-manifold: I_h(M) meets Θ_9/bP_10 trivially" },
    Rule { id: "homotopy-inertia-9-spin-simply-connected", statement: "closed simply connected spin 9-manifold: I_h(M) = 0" },
    Rule { id: "homotopy-inertia-9-eta", statement: "non-spin, Sq^2 d_2 = 0, free carrier: I_h(M) contains Z/2⟨η∘ε⟩ ⊕ Z/2⟨μ⟩" },
    Rule { id: "homotopy-inertia-9-iota-eta", statement: "non-spin, Sq^2 d_2 = 0, torsion carrier: I_h(M) contains Z/2⟨η∘ε⟩ and does not contain μ" },
    Rule { id: "homotopy-inertia-9-sq2d2", statement: "non-spin with Sq^2 d_2 ≠ 0: I_h(M) contains Z/2⟨η∘ε⟩ ⊕ Z/2⟨μ⟩" },
    Rule { id: "homotopy-inertia-10", statement: "closed simply connected 10-manifold: I_h = 0 if spin, Φ = 0 and the ψ-shape is trivial or a torsion carrier; Z/2⟨η∘μ⟩ otherwise" },
    Rule { id: "oriented-3-local", statement: "closed oriented 10-manifold: I_h(M) meets the 3-part of Θ_10 trivially" },
    Rule { id: "nonorientable-3-local", statement: "closed non-orientable 10-manifold: H^10(M;Z/3) = 0 and I_h(M) contains Z/3⟨β_1⟩" },
    Rule { id: "definition-inclusion", statement: "I_c(M) ⊆ I_h(M) ⊆ I(M) by definition" },
    Rule { id: "kervaire-bp", statement: "bP_10 ⊆ I_h(L^9(m)) exactly when 4 divides m" },
    Rule { id: "lens-inertia", statement: "I(L^9(m)) = 0 for odd m, Z/2⟨η∘ε⟩ for m ≡ 2 (mod 4), Z/2⟨η∘ε⟩ ⊕ bP_10 for 4 | m; self-equivalences of lens spaces are homotopic to the identity" },
    Rule { id: "rp8-inertia", statement: "self-homotopy equivalences of RP^8 are homotopic to diffeomorphisms, so I(RP^8) = I_h(RP^8) = 0 and RP^8 # Σ is exotic for Σ ≠ 0" },
    Rule { id: "rp10-inertia", statement: "I_h(RP^10) = Z/3⟨β_1⟩ ⊕ Z/2⟨η∘μ⟩ and I(RP^10) = Θ_10" },
    Rule { id: "user-assertion", statement: "hypothesis supplied on the command line, not computed" },
    Rule { id: "hypothesis-gap", statement: "the concordance formula in dimension 10 needs only H_1 = 0; the inertia statements need simple connectivity" },
];

pub fn rule(id: &str) -> Option<&'static Rule> {
    RULES.iter().find(|r| r.id == id)
}

/// A trace entry: rule id plus the instance it was applied to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Citation {
    pub id: String,
    pub anchor: String,
}
