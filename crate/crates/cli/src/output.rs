use kfde::analysis::figures::FigureCheck;
use kfde::PointedModel;

#[derive(Clone, Copy)]
pub struct Style {
    pub unicode: bool,
    pub json: bool,
}

/// ```text
/// worlds: w0* w1
/// R: w0 -> w1
/// w0: p=T q=N
/// ```
pub fn model(m: &PointedModel, style: Style) -> String {
    let frame = m.model.frame();
    let arrow = if style.unicode { " → " } else { " -> " };
    let worlds: Vec<String> = frame
        .worlds()
        .iter()
        .map(|w| if *w == m.world { format!("{w}*") } else { w.clone() })
        .collect();
    let edges: Vec<String> =
        frame.edges().map(|(i, j)| format!("{}{arrow}{}", frame.world_name(i), frame.world_name(j))).collect();
    let vars = m.model.variables();
    let edges = if edges.is_empty() { "(none)".to_owned() } else { edges.join(", ") };
    let mut lines = vec![format!("worlds: {}", worlds.join(" ")), format!("R: {edges}")];
    for (i, w) in frame.worlds().iter().enumerate() {
        let values: Vec<String> = vars.iter().map(|v| format!("{v}={}", m.model.value_at(i, v))).collect();
        lines.push(format!("{w}: {}", values.join(" ")));
    }
    lines.join("\n")
}

pub fn check_table(checks: &[FigureCheck]) -> String {
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut lines: Vec<String> = checks
        .iter()
        .map(|c| format!("{}  {:width$}  {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail))
        .collect();
    let passed = checks.iter().filter(|c| c.passed).count();
    lines.push(format!("{passed}/{} checks passed", checks.len()));
    lines.join("\n")
}
