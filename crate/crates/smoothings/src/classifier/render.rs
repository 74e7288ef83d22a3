use std::fmt::Write;

use super::{ClassificationResult, InertiaBounds};

fn bounds(b: &InertiaBounds) -> String {
    if b.exact {
        b.lower.to_string()
    } else {
        format!("between {} and {}", b.lower, b.upper)
    }
}

impl ClassificationResult {
    /// Human-readable table.
    pub fn render_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} (n = {})", self.name, self.n);
        if let Some(c) = &self.case {
            let _ = writeln!(s, "  case        {c}");
        }
        if !self.assertions.is_empty() {
            let _ = writeln!(s, "  assertions  {}", self.assertions.join(", "));
        }
        let none = "not determined".to_string();
        match &self.concordance {
            Some(c) => {
                let _ = writeln!(s, "  C(M)        {}   [{}]", c.group.primary_display(), c.group);
                for sm in &c.summands {
                    let _ = writeln!(s, "    {:<44} {}", sm.source, sm.group);
                }
            }
            None => {
                let _ = writeln!(s, "  C(M)        {none}");
            }
        }
        let _ = writeln!(s, "  I_c(M)      {}", self.ic.as_ref().map_or(none.clone(), |d| d.to_string()));
        let _ = writeln!(s, "  I_h(M)      {}", self.ih.as_ref().map_or(none.clone(), bounds));
        let _ = writeln!(s, "  I(M)        {}", self.inertia.as_ref().map_or(none, |d| d.to_string()));
        if !self.trace.is_empty() {
            let _ = writeln!(s, "  trace");
            for c in &self.trace {
                let _ = writeln!(s, "    {:<42} {}", c.id, c.anchor);
            }
        }
        if !self.caveats.is_empty() {
            let _ = writeln!(s, "  caveats");
            for c in &self.caveats {
                let _ = writeln!(s, "    - {c}");
            }
        }
        s
    }
}
