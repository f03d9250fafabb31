use std::fmt;

use crate::logic::{Evidence, PBit, TruthPair};

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Atom(String),
    Crisp(PBit),
    Pair(TruthPair),
    Counts(Evidence),
    /// Resolves to `T` with probability `ρ`, otherwise `F`.
    Random(f64),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Implies(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn atom(name: &str) -> Expr {
        Expr::Atom(name.to_string())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(e: Expr) -> Expr {
        Expr::Not(Box::new(e))
    }

    pub fn and(l: Expr, r: Expr) -> Expr {
        Expr::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Expr, r: Expr) -> Expr {
        Expr::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Expr, r: Expr) -> Expr {
        Expr::Implies(Box::new(l), Box::new(r))
    }

    pub fn depth(&self) -> usize {
        match self {
            Expr::Not(e) => 1 + e.depth(),
            Expr::And(l, r) | Expr::Or(l, r) | Expr::Implies(l, r) => 1 + l.depth().max(r.depth()),
            _ => 0,
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Implies(..) => 1,
            Expr::Or(..) => 2,
            Expr::And(..) => 3,
            Expr::Not(..) => 4,
            _ => 5,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        let parens = self.precedence() < min_prec;
        if parens {
            f.write_str("(")?;
        }
        match self {
            Expr::Atom(name) => f.write_str(name)?,
            Expr::Crisp(b) => write!(f, "{b}")?,
            Expr::Pair(p) => write!(f, "<{},{}>", p.plus, p.minus)?,
            Expr::Counts(e) => write!(f, "{{{},{},{}}}", e.plus, e.minus, e.total)?,
            Expr::Random(rho) => write!(f, "random({rho})")?,
            Expr::Not(e) => {
                f.write_str("~")?;
                e.write(f, 4)?;
            }
            // left-associative: a right operand of equal precedence needs parens
            Expr::And(l, r) => {
                l.write(f, 3)?;
                f.write_str(" & ")?;
                r.write(f, 4)?;
            }
            Expr::Or(l, r) => {
                l.write(f, 2)?;
                f.write_str(" | ")?;
                r.write(f, 3)?;
            }
            // right-associative
            Expr::Implies(l, r) => {
                l.write(f, 2)?;
                f.write_str(" -> ")?;
                r.write(f, 1)?;
            }
        }
        if parens {
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Canonical text with the fewest parentheses that still parses back to the
/// same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}
