//! Compact text form (`fan[cc](1,0;0,1)`) and JSON form of cones.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Cone, Direction};
use crate::error::{Error, Result};

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flag = |c: bool| if c { 'c' } else { 'o' };
        match self {
            Cone::Zero => f.write_str("zero"),
            Cone::Full => f.write_str("full"),
            Cone::Line(a) => write!(f, "line({})", a.dir()),
            Cone::Ray(d) => write!(f, "ray({d})"),
            Cone::Fan(fan) => {
                write!(f, "fan[{}{}]({};{})", flag(fan.lo_closed()), flag(fan.hi_closed()), fan.lo(), fan.hi())
            }
        }
    }
}

fn syntax(msg: impl Into<String>) -> Error {
    Error::Syntax { pos: 0, msg: msg.into() }
}

fn parse_dir(s: &str) -> Result<Direction> {
    let (x, y) = s.split_once(',').ok_or_else(|| syntax(format!("expected `x,y`, found `{s}`")))?;
    let num = |t: &str| t.trim().parse::<i64>().map_err(|_| syntax(format!("invalid integer `{}`", t.trim())));
    Direction::new(num(x)?, num(y)?)
}

fn parse_flag(c: char) -> Result<bool> {
    match c {
        'c' => Ok(true),
        'o' => Ok(false),
        _ => Err(syntax(format!("boundary flag must be `c` or `o`, found `{c}`"))),
    }
}

impl FromStr for Cone {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        match t.as_str() {
            "zero" => return Ok(Cone::Zero),
            "full" => return Ok(Cone::Full),
            _ => {}
        }
        let args = |prefix: &str| -> Option<&str> {
            t.strip_prefix(prefix).and_then(|r| r.strip_prefix('(')).and_then(|r| r.strip_suffix(')'))
        };
        if let Some(a) = args("line") {
            return Ok(Cone::line(parse_dir(a)?));
        }
        if let Some(a) = args("ray") {
            return Ok(Cone::ray(parse_dir(a)?));
        }
        if let Some(rest) = t.strip_prefix("fan[") {
            let flags: Vec<char> = rest.chars().take(2).collect();
            let body = rest
                .get(2..)
                .and_then(|r| r.strip_prefix("]("))
                .and_then(|r| r.strip_suffix(')'))
                .filter(|_| flags.len() == 2)
                .ok_or_else(|| syntax(format!("malformed fan `{text}`")))?;
            let (lo, hi) = body.split_once(';').ok_or_else(|| syntax("fan needs `lo;hi`"))?;
            return Cone::fan(parse_dir(lo)?, parse_flag(flags[0])?, parse_dir(hi)?, parse_flag(flags[1])?);
        }
        Err(syntax(format!("unknown cone `{text}`")))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum ConeRepr {
    Zero,
    Full,
    Line { axis: [i64; 2] },
    Ray { dir: [i64; 2] },
    Fan { lo: [i64; 2], lo_closed: bool, hi: [i64; 2], hi_closed: bool },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ConeInput {
    Object(ConeRepr),
    Text(String),
}

impl From<&Cone> for ConeRepr {
    fn from(c: &Cone) -> Self {
        let v = |d: Direction| [d.x(), d.y()];
        match *c {
            Cone::Zero => ConeRepr::Zero,
            Cone::Full => ConeRepr::Full,
            Cone::Line(a) => ConeRepr::Line { axis: v(a.dir()) },
            Cone::Ray(d) => ConeRepr::Ray { dir: v(d) },
            Cone::Fan(f) => {
                ConeRepr::Fan { lo: v(f.lo()), lo_closed: f.lo_closed(), hi: v(f.hi()), hi_closed: f.hi_closed() }
            }
        }
    }
}

impl TryFrom<ConeRepr> for Cone {
    type Error = Error;
    fn try_from(r: ConeRepr) -> Result<Self> {
        let d = |v: [i64; 2]| Direction::new(v[0], v[1]);
        match r {
            ConeRepr::Zero => Ok(Cone::Zero),
            ConeRepr::Full => Ok(Cone::Full),
            ConeRepr::Line { axis } => Ok(Cone::line(d(axis)?)),
            ConeRepr::Ray { dir } => Ok(Cone::ray(d(dir)?)),
            ConeRepr::Fan { lo, lo_closed, hi, hi_closed } => Cone::fan(d(lo)?, lo_closed, d(hi)?, hi_closed),
        }
    }
}

impl Serialize for Cone {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ConeRepr::from(self).serialize(s)
    }
}

/// Accepts the JSON object form or the compact text form as a string.
impl<'de> Deserialize<'de> for Cone {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parsed = match ConeInput::deserialize(d)? {
            ConeInput::Object(r) => Cone::try_from(r),
            ConeInput::Text(t) => t.parse(),
        };
        parsed.map_err(serde::de::Error::custom)
    }
}

impl Cone {
    /// Parses either the compact text form or a JSON object.
    pub fn parse_any(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('{') || t.starts_with('"') {
            Ok(serde_json::from_str(t)?)
        } else {
            t.parse()
        }
    }
}
