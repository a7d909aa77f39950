//! Calendar and clock puzzles.
//!
//! Both are plain modular arithmetic. Calendars carry explicit leap-year
//! flags instead of Gregorian years, so a query never depends on which
//! actual year is meant.

use alloc::string::String;

use serde::{Deserialize, Serialize};

use crate::answer::{ClockTime, Weekday};
use crate::error::{Error, Result};
use crate::rng::Rng;

pub const MONTH_NAMES: [&str; 12] = [
    "January",
    "February",
    "March",
    "April",
    "May",
    "June",
    "July",
    "August",
    "September",
    "October",
    "November",
    "December",
];

/// Days in `month` (1-based).
pub fn month_length(month: u8, leap: bool) -> u8 {
    match month {
        2 if leap => 29,
        2 => 28,
        4 | 6 | 9 | 11 => 30,
        _ => 31,
    }
}

fn year_length(leap: bool) -> i64 {
    if leap {
        366
    } else {
        365
    }
}

/// Zero-based day of the year for `month`/`day`.
fn day_of_year(month: u8, day: u8, leap: bool) -> i64 {
    (1..month)
        .map(|m| month_length(m, leap) as i64)
        .sum::<i64>()
        + day as i64
        - 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CalendarInstance {
    pub shown_month: u8,
    /// Weekday of the shown month's first day; 0 = Monday.
    pub weekday_of_first: u8,
    pub days_in_month: u8,
    pub shown_year_leap: bool,
    pub query_month: u8,
    pub query_day: u8,
    /// -1, 0 or +1 years relative to the shown month.
    pub query_year_offset: i8,
    pub query_year_leap: bool,
}

impl CalendarInstance {
    pub fn validate(&self) -> Result<()> {
        if !(1..=12).contains(&self.shown_month) || !(1..=12).contains(&self.query_month) {
            return Err(Error::invalid("month out of range"));
        }
        if self.weekday_of_first > 6 {
            return Err(Error::invalid("weekday out of range"));
        }
        if self.days_in_month != month_length(self.shown_month, self.shown_year_leap) {
            return Err(Error::invalid(
                "days_in_month disagrees with month and leap flag",
            ));
        }
        if self.query_day == 0
            || self.query_day > month_length(self.query_month, self.query_year_leap)
        {
            return Err(Error::invalid("query day does not exist in that month"));
        }
        match self.query_year_offset {
            0 if self.query_year_leap != self.shown_year_leap => {
                Err(Error::invalid("same year with different leap flags"))
            }
            -1 | 1 if self.query_year_leap && self.shown_year_leap => {
                Err(Error::invalid("adjacent years cannot both be leap years"))
            }
            -1..=1 => Ok(()),
            _ => Err(Error::invalid("year offset must be -1, 0 or +1")),
        }
    }
}

/// Weekday of the queried date.
pub fn solve_calendar(inst: &CalendarInstance) -> Result<Weekday> {
    inst.validate()?;
    let shown = day_of_year(inst.shown_month, 1, inst.shown_year_leap);
    let query = day_of_year(inst.query_month, inst.query_day, inst.query_year_leap);
    let offset = match inst.query_year_offset {
        0 => query - shown,
        1 => year_length(inst.shown_year_leap) - shown + query,
        _ => -(shown + year_length(inst.query_year_leap) - query),
    };
    Ok(Weekday::from_index(inst.weekday_of_first as i64 + offset))
}

pub fn gen_calendar(rng: &mut Rng) -> CalendarInstance {
    let shown_month = rng.range(1, 12) as u8;
    let shown_year_leap = rng.chance(1, 4);
    let query_year_offset = rng.range(-1, 1) as i8;
    let query_year_leap = match query_year_offset {
        0 => shown_year_leap,
        _ if shown_year_leap => false,
        _ => rng.chance(1, 3),
    };
    let query_month = rng.range(1, 12) as u8;
    let query_day = rng.range(1, month_length(query_month, query_year_leap) as i64) as u8;
    CalendarInstance {
        shown_month,
        weekday_of_first: rng.range(0, 6) as u8,
        days_in_month: month_length(shown_month, shown_year_leap),
        shown_year_leap,
        query_month,
        query_day,
        query_year_offset,
        query_year_leap,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClockInstance {
    pub current: ClockTime,
    /// Positive for an upcoming event, negative for a past one.
    pub delta_minutes: i32,
    pub subject: String,
}

pub fn solve_clock(inst: &ClockInstance) -> ClockTime {
    shift_clock(inst.current, inst.delta_minutes as i64)
}

pub fn shift_clock(t: ClockTime, minutes: i64) -> ClockTime {
    ClockTime::from_minutes(t.minutes_past_twelve() as i64 + minutes)
}

pub fn gen_clock(rng: &mut Rng, names: &[&str]) -> ClockInstance {
    let current = ClockTime::from_minutes(rng.range(0, 719));
    let hours = rng.range(0, 5) as i32;
    let minutes = rng.range(1, 59) as i32;
    let sign = if rng.coin() { 1 } else { -1 };
    ClockInstance {
        current,
        delta_minutes: sign * (hours * 60 + minutes),
        subject: String::from(*rng.choose(names)),
    }
}
