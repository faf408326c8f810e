//! Hand transcriptions of every catalog polynomial, in parser syntax.
//! `golden-build` turns these into the serialized files under `data/v1`.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    /// GF(p^k) with the shipped Conway polynomial; `alpha` names its generator.
    Gf(u64, u32),
    Rationals,
}

pub struct Source {
    pub id: &'static str,
    pub description: &'static str,
    pub domain: Domain,
    pub vars: &'static [&'static str],
    /// `(name, text)`; a text containing `=` is stored as an equation.
    pub items: &'static [(&'static str, &'static str)],
}

const F2: Domain = Domain::Gf(2, 1);
const F32: Domain = Domain::Gf(2, 5);

pub const SOURCES: &[Source] = &[
    Source {
        id: "phi_t",
        description: "Drinfeld modular polynomial of level T, q = 2",
        domain: F2,
        vars: &["X", "Y", "T"],
        items: &[(
            "phi",
            "X^3+Y^3+T(T+1)^3(X^2+Y^2)+T^2(T+1)^6(X+Y)+T^3(T+1)^9+X^2 Y^2+(T+1)^3(T^2+T+1)X Y+T(X^2 Y+X Y^2)",
        )],
    },
    Source {
        id: "psi_t",
        description: "depth-two step polynomial of level T",
        domain: F2,
        vars: &["X", "Y", "Z", "T"],
        items: &[(
            "psi",
            "Z^2 + (X + (Y^2 + T Y + T(T+1)^3))Z + X^2 + (Y^2 + T Y + T(T+1)^3)X + T Y^2 \
             + (T^2+T+1)(T+1)^3 Y + T^2(T+1)^6",
        )],
    },
    Source {
        id: "phi_t2t1",
        description: "Drinfeld modular polynomial of level T^2+T+1, q = 2",
        domain: F2,
        vars: &["X", "Y", "T"],
        items: &[(
            "phi",
            "X^5+Y^5 + X^4 Y^4 + (T^2 + T + 1)(X^4 Y^2+X^2 Y^4) \
             + (T^2 + T + 1)(X^4 Y+X Y^4) \
             + T^3(T+1)^3(T^2+T+1)(X^4+Y^4) \
             + T^2(T+1)^2(T^2+ T + 1)X^3 Y^3 \
             + (T^2+T)(T^2+T+1)(T^3+T+1)(T^3+T^2+1)(X^3 Y^2+X^2 Y^3) \
             + T^3(T+1)^3(T^2+T+1)(X^3 Y+X Y^3) \
             + T^6(T+1)^6(T^2+T+1)^2(X^3+Y^3) \
             + T^5(T+1)^5(T^2+T+1)(T^4+T+1)X^2 Y^2 \
             + T^6(T+1)^6(T^2+T+1)(T^4+T+1)(X^2 Y+X Y^2) \
             + T^9(T+1)^9(T^2+T+1)^3(X^2+Y^2) + T^11(T+1)^11 X Y",
        )],
    },
    Source {
        id: "phi_t2t",
        description: "Drinfeld modular polynomial of level T^2+T, q = 2",
        domain: F2,
        vars: &["X", "Y", "T"],
        items: &[(
            "phi",
            "X^9 +Y^9+ (X^8 Y^4+X^4 Y^8) + (T^2 + T + 1)(X^8 Y^2+X^2 Y^8) \
             + (T^2 + T)(X^8 Y+X Y^8) + (T^6+T^5+T^3+T^2+1)(T^2+T)(X^8+Y^8) \
             + (X^7 Y^4+X^4 Y^7)+ (T^2 + T)^3(X^7 Y^3+X^3 Y^7) \
             + (T^5+T^4+T^3+T+1)(T^5+T^3+T^2+T+1)(T^2+T)^3(X^7+Y^7) \
             + (X^6 Y^5+X^5 Y^6)+ (X^6 Y^4+X^4 Y^6) + (T^2+T+1)^5(X^6 Y^3+X^3 Y^6) \
             + (T^7+T^6+T^5+T^4+T^2+T+1)(T^7+T^3+T^2+T+1)(T^2+T)(X^6 Y^2+X^2 Y^6) \
             + (T^14+T^13+T^11+T^10+T^7+T^5+T^4+T^2+1)(T^2+T)^2(X^6 Y+X Y^6) \
             + (T^4+T+1)(T^2+T+1)(T^2+T)^5(T^8+T^6+T^5+T^4+T^3+T+1)(X^6+Y^6) \
             + X^5 Y^5 + (T^2+T+1)(T^2+T)^2(X^5 Y^4+X^4 Y^5) + (T^2 + T)^2(X^5 Y^3 +X^3 Y^5) \
             + (T^9+T^8+T^7+T^5+1)(T^9+T^7+T^6+T^3+T^2+T+1)(X^5 Y^2+X^2 Y^5) \
             + (T^6+T^5+T^2+T+1)(T^6+T^5+1)(T^2+T+1)^3(T^2+T)^2(X^5 Y+X Y^5) \
             + (T^5+T^3+T^2+T+1)(T^5+T^4+T^3+T+1)(T^2+T+1)(T^2+T)^5(X^5+Y^5) \
             + (T^18+T^17+T^16+T^10+T^9+T^4+T^2+T+1)(T^2+T+1)^2(T^2+T)(X^4 Y^2+X^2 Y^4) \
             + (T^2+T+1)^2(T^2+T)^7(X^4 Y+X Y^4)+ (T^2+T)^8(T^6+T^5+T^3+T^2+1)(X^4+Y^4) \
             + (T^10+T^9+T^8+T^6+T^5+T+1)(T^2+T+1)^3 X^3 Y^3+(T^8+T^7+T^2+T+1) \
             * (T^8+T^7+T^6+T^5+T^4+T^3+1)(T^2+T+1)(T^2+T)^2(X^3 Y^2+X^2 Y^3) \
             + (T^2+T+1)(T^2+T)^4(T^10+T^9+T^8+T^3+T^2+T+1)(X^3 Y+X Y^3) \
             + (T^4+T+1)(T^3+T+1)(T^3+T^2+1)(T^2+T+1)^3(T^2+T)^3 X^2 Y^2 \
             + (T^2+T)^10(X^2 Y+X Y^2) + (T^2+T)^10(X^2+Y^2)+ (T^4+T+1)(T^2+T)^7(X^3+Y^3) \
             + (T^3+T+1)(T^3+T^2+1)(T^2+T)^6 X Y + (T^2+T+1)(T^2+T)^8(X+Y)+ (T^2+T)^9",
        )],
    },
    Source {
        id: "jparam_t",
        description: "j0 and j1 through the uniformizer u of X0(T)",
        domain: F2,
        vars: &["u", "T"],
        items: &[("j0_num", "(u+T)^3"), ("j0_den", "u"), ("j1_num", "(u+T^2)^3"), ("j1_den", "u^2")],
    },
    Source {
        id: "jparam_t2t1",
        description: "j0 and j1 through the uniformizer u of X0(T^2+T+1)",
        domain: F2,
        vars: &["u", "T"],
        items: &[
            ("j0_num", "(u+1)^3(u^2+u+T^2+T+1)"),
            ("j0_den", "u"),
            ("j1_num", "(u+T^2+T+1)^3(u^2+u+T^2+T+1)"),
            ("j1_den", "u^4"),
        ],
    },
    Source {
        id: "jparam_t2t",
        description: "j0 and j1 through the uniformizer u of X0(T^2+T)",
        domain: F2,
        vars: &["u", "T"],
        items: &[
            ("j0_num", "(u^3 + (T^2 + T)u +(T^2 + T))^3"),
            ("j0_den", "u(u+T)^2(u+T+1)^2"),
            ("j1_num", "(u^3 + (T^2 + T)u^2 +(T^2 + T)^2)^3"),
            ("j1_den", "u^4(u+T)^2(u+T+1)^2"),
        ],
    },
    Source {
        id: "factors_t",
        description: "cross-difference for level T and its factors; the last factor is f_T",
        domain: F2,
        vars: &["X", "Y", "T"],
        items: &[
            ("cross", "(X+T^2)^3 Y+(Y+T)^3 X^2"),
            ("factor", "X Y+T^3"),
            ("factor", "X^2+X Y^2+X Y T+Y T^3"),
        ],
    },
    Source {
        id: "factors_t2t1",
        description: "cross-difference for level T^2+T+1 and its factors; the last factor is f_{T^2+T+1}",
        domain: F2,
        vars: &["X", "Y", "T"],
        items: &[
            (
                "cross",
                "(Y^5+(T^2+T+1)Y^3+(T^2+T+1)Y^2+(T^2+T)Y+(T^2+T+1))X^4 \
                 + Y(X^5+(T^2+T)X^4+(T^2+T+1)^2 X^3+(T^2+T+1)^3 X^2+(T^2+T+1)^4)",
            ),
            ("factor", "X Y+T^2+T+1"),
            (
                "factor",
                "Y^4 X^3 + (T^2 + T + 1)(Y^3 X^2 + Y^2 X^3 + (T^2 + T + 1)Y^2 X \
                 + Y X^3 + (T^2 + T + 1)Y X^2 + (T^2 + T + 1)^2 Y) + X^4",
            ),
        ],
    },
    Source {
        id: "factors_t2t",
        description: "factors of the level T^2+T cross-difference; the last factor is f_{T^2+T}",
        domain: F2,
        vars: &["X", "Y", "T"],
        items: &[
            ("factor", "X Y + T^2 + T"),
            ("factor", "Y^2 X^2 + T Y^2 X + (T^2 + T)Y X + (T^3 + T^2)Y + T^2 X^2 + T^4 + T^2"),
            ("factor", "Y^2 X^2 + (T + 1)Y^2 X + (T^2 + T)Y X + (T^3 + T)Y + (T^2 + 1)X^2 + T^4+ T^2"),
            (
                "factor",
                "Y^4 X^3 + Y^4 X^2 + (T^2 + T)Y^4 X + (T^2 + T)Y^3 X^2 + (T^2 + T)Y^3 X +(T^4 + T^2)Y^3 \
                 + (T^2 + T + 1)Y^2 X^3 + (T^4 + T^2)Y^2 X + (T^4 + T^2)Y^2 + (T^2 + T)Y X^3 \
                 + (T^4 + T)Y X^2 + (T^6 + T^5 + T^4 + T^3)Y + X^4",
            ),
        ],
    },
    Source {
        id: "f_t2t1_mod_t",
        description: "f_{T^2+T+1} reduced modulo T (optimal tower over F4)",
        domain: F2,
        vars: &["X", "Y"],
        items: &[("f", "Y^4 X^3 + Y^3 X^2 + Y^2 X^3 + Y^2 X + Y X^3+ Y X^2 + Y + X^4")],
    },
    Source {
        id: "f_t2t_mod_t2t1",
        description: "f_{T^2+T} reduced modulo T^2+T+1 (optimal tower over F16)",
        domain: F2,
        vars: &["X", "Y"],
        items: &[("f", "Y^4 X^3 + Y^4 X^2 + Y^4 X + Y^3 X^2 + Y^3 X +Y^3 + Y^2 X + Y^2 + Y X^3 + Y + X^4")],
    },
    Source {
        id: "u0_f4",
        description: "uniformizer of X0(T^2+T+1) over F4 in terms of j0, j1",
        domain: F2,
        vars: &["j0", "j1"],
        items: &[
            (
                "num",
                "j0^4 j1^3 + j0^4 j1^2 + j0^4 j1 + j0^4 + j0^3 j1^7 + j0^3 j1^6 + j0^3 j1^4 + j0^2 j1^5 \
                 + j0 j1^5 + j0 j1^4 + j1^6 + j1^4",
            ),
            ("den", "j1^8"),
        ],
    },
    Source {
        id: "gs_q2",
        description: "y^q+y = x^q/(x^(q-1)+1) at q = 2, denominators cleared",
        domain: F2,
        vars: &["X", "Y"],
        items: &[("f", "(X+1)Y^2+(X+1)Y+X^2")],
    },
    Source {
        id: "elkies_q2",
        description: "(y+1)^(q-1) y = x^q/(x+1)^(q-1) at q = 2, denominators cleared",
        domain: F2,
        vars: &["X", "Y"],
        items: &[("f", "(X+1)(Y+1)Y+X^2")],
    },
    Source {
        id: "loetter",
        description: "level-5 classical towers over the rationals",
        domain: Domain::Rationals,
        vars: &["X", "Y", "t", "v"],
        items: &[
            ("original", "Y^5(2X^4+5X^3+2X^2+X+1) - (X^5+5X^4+X^3+2X^2+4X)"),
            ("scaled", "Y^5(X^4+2X^3+4X^2+3X+1) - X(X^4-3X^3+4X^2-2X+1)"),
            ("elkies_p", "t^5+5t^3+5t-11"),
            ("elkies_step", "(Y^5+5Y^3+5Y-11)(X^4+X^3+6X^2+6X+11) - (X-1)^5"),
            ("r_num", "v(v^4-3v^3+4v^2-2v+1)"),
            ("r_den", "v^4+2v^3+4v^2+3v+1"),
        ],
    },
    Source {
        id: "phi_alpha",
        description: "isogeny relation Phi(alpha, X, Y) over F32, alpha^5+alpha^2+1 = 0",
        domain: F32,
        vars: &["X", "Y"],
        items: &[(
            "phi",
            "(X^3+alpha^24 X^2+alpha^4 X+alpha^9)Y^3+(alpha^17 X^3+alpha^29 X^2+X+alpha^30)Y^2 \
             + (alpha^30 X^3+alpha^12 X^2+alpha^30 X+alpha^17)Y+(alpha^4 X^3+alpha^14 X^2+alpha^19)",
        )],
    },
    Source {
        id: "level2_factor",
        description: "linear factor of Phi(alpha^8, u1, T) over F1",
        domain: F32,
        vars: &["U", "T"],
        items: &[("factor", "(U + alpha^25)T + (alpha^28 U + alpha^27)")],
    },
    Source {
        id: "curve_constraints",
        description: "coefficients of phi_{S^2+S-T^3-T}, lowest tau-degree first",
        domain: F2,
        vars: &["g1", "g2", "g3", "h1", "h2", "h3", "h4", "h5"],
        items: &[
            ("c", "h5 + g3"),
            ("c", "h4 + h5^3 + g2"),
            ("c", "h3 + h4^2 h5 + h4 h5^4 + g1 + g3^7"),
            ("c", "h2 + h3^2 h5 + h3 h5^8 + h4^5 + g2^4 g3^3 + g2^2 g3^9 + g2 g3^12 + 1"),
            (
                "c",
                "h1 + h2^2 h5 + h2 h5^16 + h3^4 h4 + h3 h4^8 + g1^4 g3^3 + g1^2 g3^17 + \
                 g1 g3^24 + g2^10 g3 + g2^9 g3^4 + g2^5 g3^16",
            ),
            (
                "c",
                "h1^2 h5 + h1 h5^32 + h2^4 h4 + h2 h4^16 + h3^9 + g1^8 g2^2 g3 + g1^8 g2 g3^4 \
                 + g1^4 g2 g3^32 + g1^2 g2^16 g3 + g1 g2^16 g3^8 + g1 g2^8 g3^32 \
                 + g2^21 + g3^48 + g3^33 + g3^3 + 1",
            ),
            (
                "c",
                "h1^4 h4 + h1 h4^32 + h2^8 h3 + h2 h3^16 + h5^64 + h5 + g1^18 g3 + g1^17 g3^8 \
                 + g1^16 g2^5 + g1^9 g3^64 + g1^4 g2^33 + g1 g2^40 + g2^32 g3^16 \
                 + g2^32 g3 + g2^16 g3^64 + g2^2 g3 + g2 g3^64 + g2 g3^4",
            ),
            (
                "c",
                "h1^8 h3 + h1 h3^32 + h2^17 + h4^64 + h4 + g1^36 g2 + g1^33 g2^8 + \
                 g1^32 g3^16 + g1^32 g3 + g1^16 g3^128 + g1^9 g2^64 + g1^2 g3 + g1 g3^128 \
                 + g1 g3^8 + g2^80 + g2^65 + g2^5",
            ),
            (
                "c",
                "h1^16 h2 + h1 h2^32 + h3^64 + h3 + g1^73 + g1^64 g2^16 + g1^64 g2 + \
                 g1^16 g2^128 + g1^4 g2 + g1 g2^128 + g1 g2^8 + g3^256 + g3^16 + g3",
            ),
            ("c", "h1^33 + h2^64 + h2 + g1^144 + g1^129 + g1^9 + g2^256 + g2^16 + g2"),
            ("c", "h1^64 + h1 + g1^256 + g1^16 + g1"),
        ],
    },
    Source {
        id: "commute_constraints",
        description: "coefficients of phi_T phi_S + phi_S phi_T, lowest tau-degree first",
        domain: F2,
        vars: &["g1", "g2", "g3", "h1", "h2", "h3", "h4", "h5"],
        items: &[
            ("c", "h5^2 g3 + h5 g3^2"),
            ("c", "h4^2 g3 + h4 g3^4 + h5^4 g2 + h5 g2^2"),
            ("c", "h3^2 g3 + h3 g3^8 + h4^4 g2 + h4 g2^4 + h5^8 g1 + h5 g1^2"),
            ("c", "h2^2 g3 + h2 g3^16 + h3^4 g2 + h3 g2^8 + h4^8 g1 + h4 g1^4 + h5^16 + h5"),
            ("c", "h1^2 g3 + h1 g3^32 + h2^4 g2 + h2 g2^16 + h3^8 g1 + h3 g1^8 + h4^16 + h4"),
            ("c", "h1^4 g2 + h1 g2^32 + h2^8 g1 + h2 g1^16 + h3^16 + h3 + g3^64 + g3"),
            ("c", "h1^8 g1 + h1 g1^32 + h2^16 + h2 + g2^64 + g2"),
            ("c", "h1^16 + h1 + g1^64 + g1"),
        ],
    },
    Source {
        id: "p3",
        description: "p3 = p1 - p2^4",
        domain: F2,
        vars: &["g1", "h1"],
        items: &[("p3", "h1^4+h1+g1^16+g1^4+g1")],
    },
    Source {
        id: "isogeny_t",
        description: "lambda phi_T = psi_T lambda, tau^4 down to tau, q = 2",
        domain: F2,
        vars: &["a", "g1", "g2", "g3", "l1", "l2", "l3"],
        items: &[
            ("eq", "g1^2-a = l1-a^16"),
            ("eq", "g2^2-a g1 = l2-l1 a^8"),
            ("eq", "g3^2 -a g2 = l3 -l2 a^4"),
            ("eq", "-a g3 = -l3 a^2"),
        ],
    },
    Source {
        id: "isogeny_s",
        description: "lambda phi_S = psi_S lambda, tau^6 down to tau, q = 2",
        domain: F2,
        vars: &["a", "h1", "h2", "h3", "h4", "h5", "t1", "t2", "t3", "t4", "t5"],
        items: &[
            ("eq", "h1^2-a = t1-a^64"),
            ("eq", "h2^2-a h1 = t2-t1 a^32"),
            ("eq", "h3^2-a h2 = t3-t2 a^16"),
            ("eq", "h4^2-a h3 = t4-t3 a^8"),
            ("eq", "h5^2-a h4 = t5-t4 a^4"),
            ("eq", "-a h5 = -t5 a^2"),
        ],
    },
    Source {
        id: "eliminated_t",
        description: "relation left after eliminating l1, l2, l3, q = 2",
        domain: F2,
        vars: &["a", "g1", "g2", "g3", "gamma"],
        items: &[("rel", "a^15 + g1 a^7 + g2 a^3 + g3 a = gamma")],
    },
    Source {
        id: "eliminated_s",
        description: "relation left after eliminating t1..t5, q = 2",
        domain: F2,
        vars: &["a", "h1", "h2", "h3", "h4", "h5", "beta"],
        items: &[("rel", "a^63 + h1 a^31 + h2 a^15 + h3 a^7 + h4 a^3 + h5 a = beta")],
    },
    Source {
        id: "component_relation",
        description: "degree-13 relation between g2 and g = g3^3 on one component (transcribed, unverified)",
        domain: F32,
        vars: &["g2", "g"],
        items: &[(
            "rel",
            "g2^13 + (alpha^5 g + alpha^14)g2^12 + (alpha^4 g^2 + alpha^19 g + alpha^7)g2^11 \
             + (alpha^9 g^3 + alpha^18 g^2 + alpha^9 g + alpha^21)g2^10 \
             + (alpha^10 g^4 + alpha^21 g^3 + alpha^16 g^2 + alpha^18 g + alpha^8)g2^9 \
             + (alpha^15 g^5 + alpha^29 g^4 + alpha^10 g^3 + alpha^27 g^2 + alpha^25 g + alpha^8)g2^8 \
             + (g^6 + alpha^28 g^5 + alpha^6 g^4 + alpha^11 g^3 + alpha^6 g^2 + alpha^28 g + alpha^9)g2^7 \
             + (alpha^5 g^7 + alpha^23 g^6 + alpha^2 g^5 + alpha^15 g^4 + alpha^12 g^3 + alpha^4 g^2 + alpha^6 g + alpha^25)g2^6 \
             + (alpha^4 g^8 + alpha^30 g^7 + alpha^18 g^6 + alpha^3 g^5 + alpha^15 g^4 + alpha^12 g^3 \
               + alpha^23 g^2 + alpha^29 g + alpha^10)g2^5 \
             + (alpha^9 g^9 + alpha^25 g^8 + alpha^8 g^7 + alpha g^6 + alpha^7 g^5 + alpha^25 g^4 + alpha^23 g^3 \
               + alpha^15 g^2 + alpha g + alpha^26)g2^4 \
             + (alpha^4 g^10 + alpha^27 g^9 + alpha^15 g^8 + alpha^11 g^7 + alpha^5 g^6 + alpha^26 g^5 + alpha^18 g^4 \
               + alpha^9 g^3 + alpha^11 g^2 + alpha^30 g)g2^3 \
             + (alpha^9 g^11 + alpha^30 g^10 + alpha^10 g^9 + alpha^15 g^8 + alpha^12 g^7 + alpha^6 g^6 \
               + alpha^2 g^5 + alpha^26 g^4 + alpha^15 g^3 + alpha^6 g^2 + alpha^13 g + alpha^30)g2^2 \
             + (alpha^10 g^12 + alpha^16 g^11 + alpha^4 g^10 + alpha^12 g^9 + alpha^18 g^8 + alpha^28 g^7 + alpha^2 g^6 \
               + alpha^9 g^5 + alpha^3 g^4 + alpha^8 g^3 + alpha^10 g^2 + alpha^17 g)g2 \
             + alpha^15 g^13 + alpha^5 g^12 + alpha^24 g^11 + alpha^4 g^10 + alpha^11 g^9 + alpha^8 g^8 \
             + alpha^12 g^7 + alpha^27 g^6 + g^5 + alpha^23 g^4 + alpha^19 g^3 + alpha^8 g^2 + alpha^24 g + 1",
        )],
    },
];
