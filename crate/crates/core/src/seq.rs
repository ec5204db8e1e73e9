//! Finite presentations of total functions `ℕ → ℕ`.
//!
//! A [`Seq`] is a finite prefix followed by either a constant tail or a
//! periodic block repeated forever. Every algorithm in this crate only ever
//! inspects a bounded prefix of its inputs, and the periodic structure lets
//! scans stop after `prefix + period` positions.
//!
//! Literal syntax:
//!
//! ```text
//! seq      := prefix [ tailpart ]
//! prefix   := nat ("," nat)*        (may be empty only when a tail is present)
//! tailpart := ";" nat               (constant tail)
//!           | "%" nat ("," nat)*    (periodic tail)
//! ```
//!
//! A literal without a tail has the constant tail `0`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Tail {
    Constant(u64),
    Periodic(Vec<u64>),
}

impl Tail {
    fn period(&self) -> usize {
        match self {
            Tail::Constant(_) => 1,
            Tail::Periodic(block) => block.len(),
        }
    }

    fn at(&self, offset: u128) -> u64 {
        match self {
            Tail::Constant(c) => *c,
            Tail::Periodic(block) => block[(offset % block.len() as u128) as usize],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Seq {
    prefix: Vec<u64>,
    tail: Tail,
}

impl Seq {
    pub fn new(prefix: Vec<u64>, tail: Tail) -> Result<Self> {
        if let Tail::Periodic(block) = &tail {
            if block.is_empty() {
                return Err(Error::Contract("periodic block must be nonempty".into()));
            }
        }
        Ok(Seq { prefix, tail })
    }

    pub fn constant(c: u64) -> Self {
        Seq {
            prefix: Vec::new(),
            tail: Tail::Constant(c),
        }
    }

    /// `prefix` followed by zeros.
    pub fn finite(prefix: impl Into<Vec<u64>>) -> Self {
        Seq {
            prefix: prefix.into(),
            tail: Tail::Constant(0),
        }
    }

    pub fn periodic(prefix: impl Into<Vec<u64>>, block: impl Into<Vec<u64>>) -> Result<Self> {
        Seq::new(prefix.into(), Tail::Periodic(block.into()))
    }

    pub fn prefix(&self) -> &[u64] {
        &self.prefix
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    pub fn eval(&self, n: u64) -> u64 {
        self.eval_wide(n as u128)
    }

    fn eval_wide(&self, n: u128) -> u64 {
        let p = self.prefix.len() as u128;
        if n < p {
            self.prefix[n as usize]
        } else {
            self.tail.at(n - p)
        }
    }

    /// Number of leading positions that determine every value the sequence
    /// takes: past this point each value repeats one at a smaller index that
    /// is itself past the prefix.
    pub fn significant_len(&self) -> u64 {
        (self.prefix.len() + self.tail.period()) as u64
    }

    /// `i ↦ self(offset + 1 + i)`, by reindexing the prefix and rotating the
    /// periodic block.
    pub fn shift(&self, offset: u64) -> Seq {
        let drop = offset as u128 + 1;
        let p = self.prefix.len() as u128;
        if drop <= p {
            return Seq {
                prefix: self.prefix[drop as usize..].to_vec(),
                tail: self.tail.clone(),
            };
        }
        let tail = match &self.tail {
            Tail::Constant(c) => Tail::Constant(*c),
            Tail::Periodic(block) => {
                let r = ((drop - p) % block.len() as u128) as usize;
                let mut rotated = block[r..].to_vec();
                rotated.extend_from_slice(&block[..r]);
                Tail::Periodic(rotated)
            }
        };
        Seq {
            prefix: Vec::new(),
            tail,
        }
    }

    /// Like [`Seq::significant_len`] for several sequences at once: every
    /// index `t` at or past the returned value has `t - period` with the
    /// same values in all of them, still past every prefix.
    pub fn joint_significant_len(seqs: &[&Seq]) -> u64 {
        let start = seqs
            .iter()
            .map(|s| s.prefix.len() as u128)
            .max()
            .unwrap_or(0);
        let period = seqs
            .iter()
            .map(|s| s.tail.period() as u128)
            .fold(1u128, |acc, p| {
                acc / gcd(acc as usize, p as usize) as u128 * p
            });
        u64::try_from(start + period).unwrap_or(u64::MAX)
    }

    /// Pointwise combination of two sequences. The result is again finitely
    /// presented: its prefix covers both prefixes and its period is the lcm
    /// of both periods.
    pub fn try_zip_with<F>(&self, other: &Seq, mut op: F) -> Result<Seq>
    where
        F: FnMut(u64, u64) -> Result<u64>,
    {
        let start = self.prefix.len().max(other.prefix.len());
        let prefix = (0..start as u64)
            .map(|i| op(self.eval(i), other.eval(i)))
            .collect::<Result<Vec<_>>>()?;
        let tail = match (&self.tail, &other.tail) {
            (Tail::Constant(a), Tail::Constant(b)) => Tail::Constant(op(*a, *b)?),
            _ => {
                let (a, b) = (self.tail.period(), other.tail.period());
                let period = a / gcd(a, b) * b;
                let block = (start..start + period)
                    .map(|i| op(self.eval(i as u64), other.eval(i as u64)))
                    .collect::<Result<Vec<_>>>()?;
                Tail::Periodic(block)
            }
        };
        Ok(Seq { prefix, tail })
    }

    /// Literal with an explicit tail, e.g. `1,0;0` or `0%1,2`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.prefix))?;
        match &self.tail {
            Tail::Constant(c) => write!(f, ";{c}"),
            Tail::Periodic(block) => write!(f, "%{}", join(block)),
        }
    }
}

impl FromStr for Seq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_seq(s)
    }
}

pub fn parse_seq(text: &str) -> Result<Seq> {
    Parser {
        src: text.as_bytes(),
        pos: 0,
    }
    .seq()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn nat(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        let mut overflow = false;
        while let Some(&b) = self.src.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            match value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(b - b'0')))
            {
                Some(v) => value = v,
                None => overflow = true,
            }
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a natural number"));
        }
        if overflow {
            return Err(Error::ValueOverflow { position: start });
        }
        Ok(value)
    }

    fn list(&mut self) -> Result<Vec<u64>> {
        let mut values = vec![self.nat()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            values.push(self.nat()?);
        }
        Ok(values)
    }

    fn seq(mut self) -> Result<Seq> {
        let prefix = match self.peek() {
            Some(b';') | Some(b'%') => Vec::new(),
            None => return Err(self.error("empty sequence literal")),
            _ => self.list()?,
        };
        let tail = match self.peek() {
            None => Tail::Constant(0),
            Some(b';') => {
                self.pos += 1;
                Tail::Constant(self.nat()?)
            }
            Some(b'%') => {
                self.pos += 1;
                Tail::Periodic(self.list()?)
            }
            Some(c) => return Err(self.error(format!("unexpected character '{}'", c as char))),
        };
        if self.peek().is_some() {
            return Err(self.error("trailing input after tail"));
        }
        Ok(Seq { prefix, tail })
    }
}
