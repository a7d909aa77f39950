//! Gold answer values and their canonical text renderings.

use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Time on a 12-hour dial without AM/PM.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ClockTime {
    /// 1 to 12.
    pub hour: u8,
    /// 0 to 59.
    pub minute: u8,
}

impl ClockTime {
    pub fn new(hour: u8, minute: u8) -> Result<Self, Error> {
        if !(1..=12).contains(&hour) || minute > 59 {
            return Err(Error::Parse(alloc::format!("invalid time {hour}:{minute}")));
        }
        Ok(ClockTime { hour, minute })
    }

    /// Minutes past 12:00 on the dial, in `[0, 720)`.
    pub fn minutes_past_twelve(self) -> u32 {
        (self.hour as u32 % 12) * 60 + self.minute as u32
    }

    /// Inverse of [`ClockTime::minutes_past_twelve`]; wraps modulo 720.
    pub fn from_minutes(minutes: i64) -> Self {
        let m = minutes.rem_euclid(720) as u32;
        let hour = (m / 60) as u8;
        ClockTime {
            hour: if hour == 0 { 12 } else { hour },
            minute: (m % 60) as u8,
        }
    }
}

impl fmt::Display for ClockTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:02}", self.hour, self.minute)
    }
}

impl FromStr for ClockTime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::Parse(alloc::format!("not a clock time: `{s}`"));
        let (h, m) = s.split_once(':').ok_or_else(bad)?;
        if m.len() != 2 {
            return Err(bad());
        }
        let hour: u8 = h.parse().map_err(|_| bad())?;
        let minute: u8 = m.parse().map_err(|_| bad())?;
        ClockTime::new(hour, minute)
    }
}

/// Day of the week; numbered from Monday = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Weekday {
    Monday,
    Tuesday,
    Wednesday,
    Thursday,
    Friday,
    Saturday,
    Sunday,
}

impl Weekday {
    pub const ALL: [Weekday; 7] = [
        Weekday::Monday,
        Weekday::Tuesday,
        Weekday::Wednesday,
        Weekday::Thursday,
        Weekday::Friday,
        Weekday::Saturday,
        Weekday::Sunday,
    ];

    pub fn from_index(i: i64) -> Self {
        Weekday::ALL[i.rem_euclid(7) as usize]
    }

    pub fn index(self) -> u8 {
        self as u8
    }

    pub fn name(self) -> &'static str {
        match self {
            Weekday::Monday => "Monday",
            Weekday::Tuesday => "Tuesday",
            Weekday::Wednesday => "Wednesday",
            Weekday::Thursday => "Thursday",
            Weekday::Friday => "Friday",
            Weekday::Saturday => "Saturday",
            Weekday::Sunday => "Sunday",
        }
    }
}

impl fmt::Display for Weekday {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Weekday {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Weekday::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| Error::Parse(alloc::format!("not a weekday: `{s}`")))
    }
}

/// A gold answer in raw form; the MCQ layer only ever sees its rendering.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "snake_case")]
pub enum AnswerValue {
    Integer(i64),
    YesNo(bool),
    ClockTime(ClockTime),
    Weekday(Weekday),
    Label(String),
}

impl AnswerValue {
    pub fn as_integer(&self) -> Option<i64> {
        match self {
            AnswerValue::Integer(v) => Some(*v),
            _ => None,
        }
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for AnswerValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnswerValue::Integer(v) => write!(f, "{v}"),
            AnswerValue::YesNo(true) => f.write_str("Yes"),
            AnswerValue::YesNo(false) => f.write_str("No"),
            AnswerValue::ClockTime(t) => t.fmt(f),
            AnswerValue::Weekday(d) => d.fmt(f),
            AnswerValue::Label(s) => f.write_str(s),
        }
    }
}

impl FromStr for AnswerValue {
    type Err = Error;

    /// Most specific reading wins: integer, yes/no, clock time, weekday,
    /// then free label.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(v) = s.parse::<i64>() {
            return Ok(AnswerValue::Integer(v));
        }
        match s {
            "Yes" => return Ok(AnswerValue::YesNo(true)),
            "No" => return Ok(AnswerValue::YesNo(false)),
            _ => {}
        }
        if let Ok(t) = s.parse::<ClockTime>() {
            return Ok(AnswerValue::ClockTime(t));
        }
        if let Ok(d) = s.parse::<Weekday>() {
            return Ok(AnswerValue::Weekday(d));
        }
        if s.is_empty() {
            return Err(Error::Parse("empty answer".into()));
        }
        Ok(AnswerValue::Label(s.into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn clock_rendering() {
        let t = ClockTime::new(9, 19).unwrap();
        assert_eq!(AnswerValue::ClockTime(t).to_string(), "9:19");
        assert_eq!(ClockTime::new(12, 5).unwrap().to_string(), "12:05");
        assert_eq!(
            "9:19".parse::<AnswerValue>().unwrap(),
            AnswerValue::ClockTime(t)
        );
    }

    #[test]
    fn minutes_wrap_to_twelve() {
        assert_eq!(ClockTime::from_minutes(0), ClockTime::new(12, 0).unwrap());
        assert_eq!(ClockTime::from_minutes(-1), ClockTime::new(11, 59).unwrap());
        assert_eq!(
            ClockTime::from_minutes(720 + 61),
            ClockTime::new(1, 1).unwrap()
        );
    }

    #[test]
    fn rejects_bad_times() {
        assert!("13:00".parse::<ClockTime>().is_err());
        assert!("0:10".parse::<ClockTime>().is_err());
        assert!("9:7".parse::<ClockTime>().is_err());
    }

    #[test]
    fn weekday_and_yes_no() {
        assert_eq!(
            "Friday".parse::<AnswerValue>().unwrap(),
            AnswerValue::Weekday(Weekday::Friday)
        );
        assert_eq!(
            "No".parse::<AnswerValue>().unwrap(),
            AnswerValue::YesNo(false)
        );
        assert_eq!(
            "Jewelry".parse::<AnswerValue>().unwrap(),
            AnswerValue::Label("Jewelry".into())
        );
    }

    fn any_answer() -> impl Strategy<Value = AnswerValue> {
        prop_oneof![
            (0i64..100_000).prop_map(AnswerValue::Integer),
            any::<bool>().prop_map(AnswerValue::YesNo),
            (1u8..=12, 0u8..60)
                .prop_map(|(h, m)| AnswerValue::ClockTime(ClockTime::new(h, m).unwrap())),
            (0i64..7).prop_map(|d| AnswerValue::Weekday(Weekday::from_index(d))),
            "[A-Z][a-z]{2,10}( [A-Z][a-z]{2,8})?"
                .prop_filter("reserved", |s| s != "Yes"
                    && s != "No"
                    && s.parse::<Weekday>().is_err())
                .prop_map(AnswerValue::Label),
        ]
    }

    proptest! {
        #[test]
        fn rendering_round_trips(a in any_answer()) {
            prop_assert_eq!(a.to_string().parse::<AnswerValue>().unwrap(), a);
        }

        #[test]
        fn clock_minutes_round_trip(m in 0i64..720) {
            prop_assert_eq!(ClockTime::from_minutes(m).minutes_past_twelve() as i64, m);
        }
    }
}
