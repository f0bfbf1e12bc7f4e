use std::io::{self, Write};

use descartes_core::discriminant::RegionSample;
use descartes_core::rational::format_decimal_or_fraction;

/// `a,b[,c],pos,neg,on_locus`, one row per sample in grid order.
pub fn write_samples<W: Write + ?Sized>(out: &mut W, samples: &[RegionSample]) -> io::Result<()> {
    let quartic = samples.first().is_some_and(|s| s.params.len() == 3);
    writeln!(
        out,
        "{}",
        if quartic {
            "a,b,c,pos,neg,on_locus"
        } else {
            "a,b,pos,neg,on_locus"
        }
    )?;
    for s in samples {
        let params: Vec<String> = s.params.iter().map(format_decimal_or_fraction).collect();
        writeln!(
            out,
            "{},{},{},{}",
            params.join(","),
            s.signature.pos,
            s.signature.neg,
            s.on_locus
        )?;
    }
    Ok(())
}
