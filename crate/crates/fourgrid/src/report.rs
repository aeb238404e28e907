//! CSV serialization for report rows and other tabular artifacts.
//!
//! Format contract: UTF-8, LF line endings, RFC-4180-style quoting, reals at
//! 17 significant digits, and a first line `# cmd: <argv>` recording the
//! invocation so a file identifies the run that produced it.

use crate::converge::ReportRow;
use std::io::{self, Write};

/// A real with 17 significant digits, round-trippable to the same f64.
pub fn float_field(x: f64) -> String {
    format!("{x:.16e}")
}

/// Quotes a field if it contains a comma, quote, or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Writes a comment line with the producing command, a header row, and the
/// data rows.
pub fn write_csv<W: Write>(
    w: &mut W,
    cmd: &str,
    header: &[&str],
    rows: impl IntoIterator<Item = Vec<String>>,
) -> io::Result<()> {
    write!(w, "# cmd: {cmd}\n{}\n", header.join(","))?;
    for row in rows {
        let line: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
        write!(w, "{}\n", line.join(","))?;
    }
    Ok(())
}

/// Serializes [`ReportRow`]s under the `function,n,metric,value,bound,pass`
/// schema.
pub fn write_report<W: Write>(w: &mut W, cmd: &str, rows: &[ReportRow]) -> io::Result<()> {
    write_csv(
        w,
        cmd,
        &["function", "n", "metric", "value", "bound", "pass"],
        rows.iter().map(|r| {
            vec![
                r.function.clone(),
                r.n.to_string(),
                r.metric.clone(),
                float_field(r.value),
                r.bound.map(float_field).unwrap_or_default(),
                r.pass.to_string(),
            ]
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_field_has_17_significant_digits() {
        assert_eq!(float_field(1.0), "1.0000000000000000e0");
        assert_eq!(float_field(0.5), "5.0000000000000000e-1");
        let x = std::f64::consts::PI;
        assert_eq!(float_field(x).parse::<f64>().unwrap(), x);
    }

    #[test]
    fn quoting() {
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn report_layout() {
        let rows = vec![ReportRow {
            function: "gaussian".into(),
            n: 4,
            metric: "spectrum_error(t=0)".into(),
            value: 0.25,
            bound: None,
            pass: true,
        }];
        let mut buf = Vec::new();
        write_report(&mut buf, "fourgrid converge", &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "# cmd: fourgrid converge\nfunction,n,metric,value,bound,pass\n\
             gaussian,4,spectrum_error(t=0),2.5000000000000000e-1,,true\n"
        );
        assert!(!text.contains('\r'));
    }
}
