//! Serialized interchange formats.
//!
//! Presentations: `{"n": 4, "intervals": [[1,2],[1,4]], "partition": [1,3]}`
//! (partition optional, thresholds starting at 1). Field descriptors carry
//! the characteristic as a decimal string plus, for extensions, the degree
//! and the monic modulus `[c_0, ..., c_{s-1}, 1]`. Prime field elements are
//! decimal strings; extension elements are coefficient arrays, lowest
//! degree first. Loading re-validates everything: primality, modulus
//! irreducibility, reduced entries, and full row rank.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::ff::{ExtField, FieldCtx, FieldElement, FieldMatrix, PrimeField};
use crate::matroid::{GroundPartition, IntervalPresentation};
use crate::repr::{Provenance, Representation};
use crate::sss::{ShareVector, SharingScheme};
use crate::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub n: usize,
    pub intervals: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<usize>>,
}

impl PresentationDoc {
    pub fn from_parts(p: &IntervalPresentation, partition: Option<&GroundPartition>) -> Self {
        PresentationDoc {
            n: p.n(),
            intervals: p.intervals().to_vec(),
            partition: partition.map(|g| g.thresholds().to_vec()),
        }
    }

    pub fn to_presentation(&self) -> Result<IntervalPresentation> {
        IntervalPresentation::new(self.n, self.intervals.clone())
    }

    pub fn to_partition(&self) -> Result<Option<GroundPartition>> {
        match &self.partition {
            None => Ok(None),
            Some(t) => Ok(Some(GroundPartition::new(self.n, t.clone())?)),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FieldDoc {
    /// Characteristic, decimal.
    pub p: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    /// Monic modulus `[c_0, ..., c_{s-1}, 1]`, decimal coefficients.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<String>>,
}

impl FieldDoc {
    pub fn from_ctx(ctx: &FieldCtx) -> Self {
        match ctx {
            FieldCtx::Prime(f) => FieldDoc {
                p: f.modulus().to_string(),
                s: None,
                modulus: None,
            },
            FieldCtx::Ext(f) => FieldDoc {
                p: f.base().modulus().to_string(),
                s: Some(f.degree()),
                modulus: Some(f.modulus_poly().iter().map(|c| c.to_string()).collect()),
            },
        }
    }

    pub fn to_ctx(&self) -> Result<FieldCtx> {
        let p = parse_biguint(&self.p)?;
        let base = PrimeField::new(p)?;
        match (&self.s, &self.modulus) {
            (None, None) => Ok(FieldCtx::Prime(base)),
            (Some(s), Some(modulus)) => {
                if modulus.len() != s + 1 {
                    return Err(Error::InvalidInput(format!(
                        "modulus has {} coefficients but degree {s} needs {}",
                        modulus.len(),
                        s + 1
                    )));
                }
                let coeffs: Result<Vec<BigUint>> =
                    modulus.iter().map(|c| parse_biguint(c)).collect();
                Ok(FieldCtx::Ext(ExtField::new(base, coeffs?)?))
            }
            _ => Err(Error::InvalidInput(
                "extension fields need both s and modulus".into(),
            )),
        }
    }
}

/// A serialized field element: a decimal scalar, or a coefficient array
/// for extension fields.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementDoc {
    Scalar(String),
    Coeffs(Vec<String>),
}

pub fn element_to_doc(ctx: &FieldCtx, e: &FieldElement) -> ElementDoc {
    let coeffs = ctx.coefficients(e);
    match ctx {
        FieldCtx::Prime(_) => ElementDoc::Scalar(coeffs[0].to_string()),
        FieldCtx::Ext(_) => ElementDoc::Coeffs(coeffs.iter().map(|c| c.to_string()).collect()),
    }
}

pub fn doc_to_element(ctx: &FieldCtx, doc: &ElementDoc) -> Result<FieldElement> {
    match doc {
        // Scalars embed as constants in either kind of field.
        ElementDoc::Scalar(s) => Ok(ctx.from_biguint(&parse_biguint(s)?)),
        ElementDoc::Coeffs(cs) => {
            let coeffs: Result<Vec<BigUint>> = cs.iter().map(|c| parse_biguint(c)).collect();
            ctx.from_coeffs(&coeffs?)
        }
    }
}

fn parse_biguint(s: &str) -> Result<BigUint> {
    s.parse()
        .map_err(|_| Error::InvalidInput(format!("not a decimal integer: {s:?}")))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepresentationDoc {
    pub field: FieldDoc,
    pub rows: usize,
    pub cols: usize,
    /// Row-major entries.
    pub entries: Vec<Vec<ElementDoc>>,
    pub provenance: Provenance,
}

impl RepresentationDoc {
    pub fn from_representation(rep: &Representation) -> Self {
        let m = rep.matrix();
        let ctx = rep.ctx();
        let entries = (0..m.rows())
            .map(|i| {
                (0..m.cols())
                    .map(|j| element_to_doc(ctx, m.get(i, j)))
                    .collect()
            })
            .collect();
        RepresentationDoc {
            field: FieldDoc::from_ctx(ctx),
            rows: m.rows(),
            cols: m.cols(),
            entries,
            provenance: rep.provenance().clone(),
        }
    }

    pub fn to_representation(&self) -> Result<Representation> {
        let ctx = self.field.to_ctx()?;
        if self.entries.len() != self.rows {
            return Err(Error::InvalidInput(format!(
                "{} entry rows but rows = {}",
                self.entries.len(),
                self.rows
            )));
        }
        let mut rows = Vec::with_capacity(self.rows);
        for row in &self.entries {
            if row.len() != self.cols {
                return Err(Error::InvalidInput(format!(
                    "{} entries in a row but cols = {}",
                    row.len(),
                    self.cols
                )));
            }
            rows.push(
                row.iter()
                    .map(|d| doc_to_element(&ctx, d))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let matrix = FieldMatrix::from_rows(ctx, rows)?;
        Representation::new(matrix, self.provenance.clone())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ShareFileDoc {
    pub scheme: RepresentationDoc,
    pub p_o: usize,
    /// Player label (decimal string) to share.
    pub shares: BTreeMap<String, ElementDoc>,
}

impl ShareFileDoc {
    pub fn from_shares(scheme: &SharingScheme, shares: &ShareVector) -> Self {
        let ctx = scheme.ctx();
        ShareFileDoc {
            scheme: RepresentationDoc::from_representation(scheme.representation()),
            p_o: scheme.dealer(),
            shares: shares
                .iter()
                .map(|(&x, e)| (x.to_string(), element_to_doc(ctx, e)))
                .collect(),
        }
    }

    pub fn to_scheme(&self) -> Result<SharingScheme> {
        SharingScheme::new(self.scheme.to_representation()?, self.p_o)
    }

    pub fn to_shares(&self, scheme: &SharingScheme) -> Result<ShareVector> {
        let ctx = scheme.ctx();
        let mut map = BTreeMap::new();
        for (k, doc) in &self.shares {
            let player: usize = k
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad player label {k:?}")))?;
            map.insert(player, doc_to_element(ctx, doc)?);
        }
        Ok(ShareVector::new(map))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::{build_extension_rep, build_prime_rep};

    #[test]
    fn presentation_round_trip() {
        let doc: PresentationDoc =
            serde_json::from_str(r#"{"n":4,"intervals":[[1,2],[1,4]],"partition":[1,3]}"#).unwrap();
        let p = doc.to_presentation().unwrap();
        assert_eq!(p.n(), 4);
        assert_eq!(p.intervals(), &[(1, 2), (1, 4)]);
        let part = doc.to_partition().unwrap().unwrap();
        assert_eq!(part.m(), 2);
        let back = PresentationDoc::from_parts(&p, Some(&part));
        assert_eq!(
            serde_json::to_string(&back).unwrap(),
            r#"{"n":4,"intervals":[[1,2],[1,4]],"partition":[1,3]}"#
        );
    }

    #[test]
    fn invalid_presentation_rejected_on_load() {
        let doc: PresentationDoc =
            serde_json::from_str(r#"{"n":5,"intervals":[[1,2],[4,5]]}"#).unwrap();
        assert!(matches!(
            doc.to_presentation(),
            Err(Error::InvalidPresentation(_))
        ));
    }

    #[test]
    fn representation_round_trip_prime() {
        let p = IntervalPresentation::new(3, vec![(1, 3), (1, 3)]).unwrap();
        let rep = build_prime_rep(&p).unwrap();
        let doc = RepresentationDoc::from_representation(&rep);
        let json = serde_json::to_string(&doc).unwrap();
        let doc2: RepresentationDoc = serde_json::from_str(&json).unwrap();
        let rep2 = doc2.to_representation().unwrap();
        assert_eq!(rep.matrix(), rep2.matrix());
        assert_eq!(rep.provenance(), rep2.provenance());
        // Lossless: serializing again is byte-identical.
        assert_eq!(
            json,
            serde_json::to_string(&RepresentationDoc::from_representation(&rep2)).unwrap()
        );
    }

    #[test]
    fn representation_round_trip_extension() {
        let p = IntervalPresentation::new(3, vec![(1, 3), (1, 3)]).unwrap();
        let rep = build_extension_rep(&p, &BigUint::from(2u32)).unwrap();
        let doc = RepresentationDoc::from_representation(&rep);
        let json = serde_json::to_string(&doc).unwrap();
        assert!(json.contains(r#""construction":"extension""#));
        let rep2: Representation = serde_json::from_str::<RepresentationDoc>(&json)
            .unwrap()
            .to_representation()
            .unwrap();
        assert_eq!(rep.matrix(), rep2.matrix());
    }

    #[test]
    fn corrupted_modulus_rejected() {
        let p = IntervalPresentation::new(3, vec![(1, 3), (1, 3)]).unwrap();
        let rep = build_extension_rep(&p, &BigUint::from(2u32)).unwrap();
        let mut doc = RepresentationDoc::from_representation(&rep);
        // x^3 + x^2 + x + 1 = (x + 1)(x^2 + 1) is reducible.
        doc.field.modulus = Some(vec!["1".into(), "1".into(), "1".into(), "1".into()]);
        assert!(matches!(
            doc.to_representation(),
            Err(Error::InvalidPolynomial(_))
        ));
    }

    #[test]
    fn share_file_round_trip() {
        let p = IntervalPresentation::new(3, vec![(1, 3), (1, 3)]).unwrap();
        let rep = build_prime_rep(&p).unwrap();
        let scheme = SharingScheme::new(rep, 1).unwrap();
        let ctx = scheme.ctx().clone();
        let secret = ctx.from_u64(5);
        let coeffs = scheme
            .derive_coefficients(&secret, &[ctx.from_u64(9)])
            .unwrap();
        let shares = scheme.deal(&secret, &coeffs).unwrap();
        let doc = ShareFileDoc::from_shares(&scheme, &shares);
        let json = serde_json::to_string(&doc).unwrap();
        let doc2: ShareFileDoc = serde_json::from_str(&json).unwrap();
        let scheme2 = doc2.to_scheme().unwrap();
        let shares2 = doc2.to_shares(&scheme2).unwrap();
        assert_eq!(scheme2.reconstruct(&shares2).unwrap(), secret);
    }
}
