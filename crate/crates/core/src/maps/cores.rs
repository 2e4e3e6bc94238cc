use crate::error::Result;
use crate::rtuples::{critical_list, fill, tuple_from_critical, FillKind, RTuple};

/// The R-core: the least R-increasing upper tuple with the same critical list.
pub fn core(t: &RTuple) -> Result<RTuple> {
    Ok(fill(&critical_list(t)?, FillKind::Increasing))
}

/// The floor flag of a gapless tuple.
pub fn floor_of(g: &RTuple) -> Result<RTuple> {
    g.require_gapless()?;
    tuple_from_critical(&critical_list(g)?, FillKind::Floor)
}

/// The ceiling flag of a gapless tuple.
pub fn ceiling_of(g: &RTuple) -> Result<RTuple> {
    g.require_gapless()?;
    tuple_from_critical(&critical_list(g)?, FillKind::Ceiling)
}

/// The ceiling fill applied to any upper tuple, without the flag requirement.
pub fn platform(t: &RTuple) -> Result<RTuple> {
    Ok(fill(&critical_list(t)?, FillKind::Ceiling))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn t(s: &str) -> RTuple {
        RTuple::parse(s).unwrap()
    }

    #[test]
    fn known_images() {
        assert_eq!(core(&t("7,9,6;5,5,9,8,9;9")).unwrap(), t("4,5,6;4,5,7,8,9;9"));
        assert_eq!(floor_of(&t("3,4,6;4,5,6,8,9;9")).unwrap(), t("3,4,6;6,6,6,8,9;9"));
        assert_eq!(ceiling_of(&t("3,4,5;4,5,6,8,9;9")).unwrap(), t("5,5,5;6,6,6,9,9;9"));
        assert_eq!(platform(&t("3,4,5;4,5,6,8,9;9")).unwrap(), t("5,5,5;6,6,6,9,9;9"));
        assert_eq!(platform(&t("7,9,6;5,5,9,8,9;9")).unwrap(), t("6,6,6;5,5,9,9,9;9"));
    }

    #[test]
    fn small_cases() {
        assert_eq!(core(&t("3,3;3")).unwrap(), t("2,3;3"));
        assert_eq!(core(&t("2,6,7;4,5,7,8,9;9")).unwrap(), t("2,6,7;4,5,7,8,9;9"));
        assert_eq!(platform(&t("1,2,3,4")).unwrap(), t("4,4,4,4"));
        assert_eq!(platform(&t("1;2;3;4")).unwrap(), t("1;2;3;4"));
    }

    #[test]
    fn errors() {
        assert!(matches!(core(&t("2,1,3")), Err(Error::NotUpper { position: 2, .. })));
        assert!(matches!(floor_of(&t("2,4,6;4,6,7,8,9;9")), Err(Error::NotGapless(3))));
    }
}
