use genus2st::counting::parse_curve;
use genus2st::fixtures::Q_CURVES;
use genus2st::stats::NumberFieldSpec;
use genus2st::survey::{identify, IdentifyOptions, IdentifyVerdict};

fn main() {
    let field = NumberFieldSpec::rationals();
    let opts = IdentifyOptions::default();
    let jobs: Vec<_> = Q_CURVES.to_vec();
    let t0 = std::time::Instant::now();
    let results = genus2st::parallel::par_map(jobs, |fx| {
        let c = parse_curve(fx.curve).unwrap();
        let t = std::time::Instant::now();
        let o = identify(&c, &field, &opts).unwrap();
        (fx, o, t.elapsed())
    });
    let mut correct = 0;
    for (fx, o, dt) in &results {
        let tag = match &o.verdict {
            IdentifyVerdict::Identified { group, stable_b, distance } => {
                let ok = *group == fx.group;
                if ok { correct += 1; }
                format!("{} (B={stable_b}, d={distance}) {}", group, if ok { "OK" } else { "** WRONG **" })
            }
            IdentifyVerdict::NoMatch { nearest, .. } =>
                format!("NoMatch (nearest {} d={})", nearest[0].0, nearest[0].1),
            IdentifyVerdict::Unstable { nearest, .. } =>
                format!("Unstable (nearest {} d={})", nearest[0].0, nearest[0].1),
        };
        println!("{:<45} want {:<10} -> {tag}  [{dt:.1?}]", fx.curve, fx.group.label());
    }
    println!("correct: {correct}/34  total {:?}", t0.elapsed());
}
