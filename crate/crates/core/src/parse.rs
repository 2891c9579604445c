//! Text grammar for groups and spaces.
//!
//! Groups: `Z`, `Z/n` (n >= 2), `0`, `+` for direct sums and `^k` for
//! repeated summands, e.g. `Z^2 + Z/4 + Z/6`. Whitespace is ignored.
//!
//! Spaces: `Sigma^m K(G,1)`, `Sigma^m K(G,1) /\ K(H,1)`, `Sigma^m M(G,n)`,
//! `S^n`, `RP^n`, `RP^inf`, and the names `Sigma3`, `A4`, `SL(Z)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::FgAbGroup;
use crate::homotopy::RegistrySpace;
use crate::space::{em1_of_group, smash, sphere, susp_n, wedge, SpaceExpr};

/// A space the calculator knows how to dispatch on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SpaceTarget {
    /// `Sigma^susp (K(G1,1) /\ ... /\ K(Gk,1))`; a single factor is `Sigma^susp K(G,1)`.
    Em1 {
        susp: u32,
        factors: Vec<FgAbGroup>,
    },
    /// `Sigma^susp M(G, dim)`.
    Moore {
        susp: u32,
        group: FgAbGroup,
        dim: u32,
    },
    Sphere(u32),
    /// `Sigma X` for a named space `X`.
    Named(RegistrySpace),
}

fn write_susp(f: &mut fmt::Formatter<'_>, susp: u32) -> fmt::Result {
    match susp {
        0 => Ok(()),
        1 => write!(f, "Sigma "),
        k => write!(f, "Sigma^{k} "),
    }
}

impl fmt::Display for SpaceTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceTarget::Em1 { susp, factors } => {
                write_susp(f, *susp)?;
                for (i, g) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, " /\\ ")?;
                    }
                    write!(f, "K({g},1)")?;
                }
                Ok(())
            }
            SpaceTarget::Moore { susp, group, dim } => {
                write_susp(f, *susp)?;
                write!(f, "M({group},{dim})")
            }
            SpaceTarget::Sphere(n) => write!(f, "S^{n}"),
            SpaceTarget::Named(x) => write!(f, "{x}"),
        }
    }
}

impl SpaceTarget {
    /// The underlying space expression, for homology. Named spaces have none.
    pub fn to_expr(&self) -> Result<SpaceExpr> {
        match self {
            SpaceTarget::Em1 { susp, factors } => {
                let parts = factors.iter().map(em1_of_group).collect();
                Ok(susp_n(smash(parts), *susp))
            }
            SpaceTarget::Moore { susp, group, dim } => {
                // M(A + B, n) is the wedge M(A,n) v M(B,n)
                let parts = group
                    .cyclic_orders()
                    .into_iter()
                    .map(|q| match q {
                        0 => SpaceExpr::Sphere(*dim),
                        q => SpaceExpr::Moore { order: q, dim: *dim },
                    })
                    .collect();
                Ok(susp_n(wedge(parts), *susp))
            }
            SpaceTarget::Sphere(n) => sphere(*n),
            SpaceTarget::Named(x) => Err(Error::NotCovered(format!("homology of the named space {x}"))),
        }
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.pos, message: message.into() })
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.error(format!("expected `{token}`"))
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let digits: usize = self.rest().chars().take_while(|c| c.is_ascii_digit()).count();
        if digits == 0 {
            return self.error("expected a number");
        }
        let text = &self.rest()[..digits];
        match text.parse() {
            Ok(n) => {
                self.pos += digits;
                Ok(n)
            }
            Err(_) => self.error(format!("number {text} is too large")),
        }
    }

    fn small_number(&mut self) -> Result<u32> {
        let start = self.pos;
        let n = self.number()?;
        u32::try_from(n).map_err(|_| Error::Parse { position: start, message: format!("{n} is too large") })
    }

    fn group(&mut self) -> Result<FgAbGroup> {
        let mut orders = Vec::new();
        loop {
            self.skip_ws();
            let start = self.pos;
            let order = if self.eat("Z") {
                if self.eat("/") {
                    self.skip_ws();
                    let at = self.pos;
                    let n = self.number()?;
                    if n < 2 {
                        return Err(Error::Parse { position: at, message: format!("Z/{n} needs n >= 2") });
                    }
                    Some(n)
                } else {
                    Some(0)
                }
            } else if self.eat("0") {
                None
            } else {
                return Err(Error::Parse { position: start, message: "expected `Z`, `Z/n` or `0`".into() });
            };
            let mut count = 1;
            if self.eat("^") {
                self.skip_ws();
                let at = self.pos;
                count = self.number()?;
                if count < 1 {
                    return Err(Error::Parse { position: at, message: "exponent must be at least 1".into() });
                }
            }
            if let Some(q) = order {
                for _ in 0..count {
                    orders.push(q);
                }
            }
            if !self.eat("+") {
                break;
            }
        }
        Ok(FgAbGroup::from_cyclic_orders(&orders))
    }

    fn finish<T>(&mut self, value: T) -> Result<T> {
        if self.at_end() {
            Ok(value)
        } else {
            self.error("unexpected trailing input")
        }
    }
}

/// Parse a group expression into canonical form.
pub fn parse_group(s: &str) -> Result<FgAbGroup> {
    let mut c = Cursor::new(s);
    if c.at_end() {
        return c.error("empty group expression");
    }
    let g = c.group()?;
    c.finish(g)
}

/// Parse a space expression.
pub fn parse_space(s: &str) -> Result<SpaceTarget> {
    let mut c = Cursor::new(s);
    for (name, target) in [
        ("SL(Z)", RegistrySpace::SpecialLinearZ),
        ("A4", RegistrySpace::Alternating4),
        ("Sigma3", RegistrySpace::Symmetric3),
    ] {
        if s.trim() == name {
            return Ok(SpaceTarget::Named(target));
        }
    }
    if c.eat("RP^") {
        let target = if c.eat("inf") {
            RegistrySpace::RealProjective(None)
        } else {
            let at = c.pos;
            let n = c.small_number()?;
            if n == 0 {
                return Err(Error::Parse { position: at, message: "RP^n needs n >= 1".into() });
            }
            RegistrySpace::RealProjective(Some(n))
        };
        return c.finish(SpaceTarget::Named(target));
    }
    if c.eat("S^") {
        let at = c.pos;
        let n = c.small_number()?;
        if n == 0 {
            return Err(Error::Parse { position: at, message: "S^n needs n >= 1".into() });
        }
        return c.finish(SpaceTarget::Sphere(n));
    }
    let mut susp = 0;
    if c.eat("Sigma") {
        susp = 1;
        if c.eat("^") {
            susp = c.small_number()?;
        }
    }
    if c.eat("K(") {
        let mut factors = vec![em1_factor(&mut c)?];
        while c.eat("/\\") {
            c.expect("K(")?;
            factors.push(em1_factor(&mut c)?);
        }
        return c.finish(SpaceTarget::Em1 { susp, factors });
    }
    if c.eat("M(") {
        let group = c.group()?;
        c.expect(",")?;
        let at = c.pos;
        let dim = c.small_number()?;
        if dim == 0 {
            return Err(Error::Parse { position: at, message: "Moore spaces start in dimension 1".into() });
        }
        c.expect(")")?;
        return c.finish(SpaceTarget::Moore { susp, group, dim });
    }
    c.error("expected `K(`, `M(`, `S^`, `RP^` or a named space (Sigma3, A4, SL(Z))")
}

/// Rest of `K(G,1)` after the opening parenthesis.
fn em1_factor(c: &mut Cursor<'_>) -> Result<FgAbGroup> {
    let g = c.group()?;
    c.expect(",")?;
    let at = c.pos;
    if c.number()? != 1 {
        return Err(Error::Parse { position: at, message: "only K(G,1) is supported".into() });
    }
    c.expect(")")?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: &[u64]) -> FgAbGroup {
        FgAbGroup::from_cyclic_orders(v)
    }

    #[test]
    fn groups() {
        assert_eq!(parse_group("Z^2 + Z/4 + Z/6").unwrap(), g(&[0, 0, 2, 12]));
        assert_eq!(parse_group("Z/8^2").unwrap(), g(&[8, 8]));
        assert_eq!(parse_group(" 0 ").unwrap(), g(&[]));
        assert_eq!(parse_group("Z+0").unwrap(), g(&[0]));
        assert_eq!(parse_group("Z / 3").unwrap(), g(&[3]));
    }

    #[test]
    fn group_errors_carry_positions() {
        assert_eq!(parse_group("Z/1"), Err(Error::Parse { position: 2, message: "Z/1 needs n >= 2".into() }));
        assert!(matches!(parse_group("Z/2 + Q"), Err(Error::Parse { position: 6, .. })));
        assert!(matches!(parse_group("Z^0"), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(parse_group("Z Z"), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(parse_group(""), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(parse_group("Z/99999999999999999999"), Err(Error::Parse { .. })));
    }

    #[test]
    fn spaces() {
        assert_eq!(parse_space("Sigma K(Z/2,1)").unwrap(), SpaceTarget::Em1 { susp: 1, factors: vec![g(&[2])] });
        assert_eq!(parse_space("Sigma^2 K(Z/4,1)").unwrap(), SpaceTarget::Em1 { susp: 2, factors: vec![g(&[4])] });
        assert_eq!(parse_space("RP^4").unwrap(), SpaceTarget::Named(RegistrySpace::RealProjective(Some(4))));
        assert_eq!(parse_space("RP^inf").unwrap(), SpaceTarget::Named(RegistrySpace::RealProjective(None)));
        assert_eq!(parse_space("SL(Z)").unwrap(), SpaceTarget::Named(RegistrySpace::SpecialLinearZ));
        assert_eq!(parse_space("S^3").unwrap(), SpaceTarget::Sphere(3));
        assert_eq!(parse_space("Sigma M(Z/2,2)").unwrap(), SpaceTarget::Moore { susp: 1, group: g(&[2]), dim: 2 });
        assert_eq!(
            parse_space("Sigma K(Z/2,1) /\\ K(Z/8,1)").unwrap(),
            SpaceTarget::Em1 { susp: 1, factors: vec![g(&[2]), g(&[8])] }
        );
        assert!(parse_space("Sigma K(Z/2,2)").is_err());
        assert!(parse_space("CP^2").is_err());
        assert!(parse_space("S^0").is_err());
    }

    #[test]
    fn round_trip() {
        for s in [
            "Sigma K(Z/2 + Z/12,1)",
            "Sigma^3 K(Z^2,1)",
            "K(Z/3,1)",
            "Sigma^2 M(Z/4,3)",
            "S^2",
            "RP^inf",
            "RP^3",
            "Sigma3",
            "A4",
            "SL(Z)",
            "Sigma K(Z/4,1) /\\ K(Z/8,1)",
        ] {
            let t = parse_space(s).unwrap();
            assert_eq!(t.to_string(), s);
            assert_eq!(parse_space(&t.to_string()).unwrap(), t);
        }
    }
}
