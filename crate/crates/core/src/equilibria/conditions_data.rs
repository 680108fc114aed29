//! Condition registry data: printed closed forms for the threshold
//! tables and the thresholds implied by the attraction tables.
//!
//! Produced by a symbolic transcription of the payoff tables.

use super::conditions::{dev, lvl, rf, Choice, ConditionSpec, Direction, Erratum, Group};
use super::Role;

pub(super) fn registry() -> Vec<ConditionSpec> {
    vec![
        ConditionSpec {
            name: "alpha_ha_0_inv_la3",
            groups: vec![Group::Nash],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![dev("030", Role::Ha, "INN")],
            branch_lo: rf(&[1], &[4]),
            branch_hi: rf(&[1, -1], &[2]),
            lo_printed: true,
            derived_lo: rf(&[1], &[4]),
            derived_hi: rf(&[1, -1], &[2]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la_0_ninv",
            groups: vec![Group::Nash],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![dev("030", Role::LaJ, "INN")],
            branch_lo: rf(&[-1, 3], &[0, 2]),
            branch_hi: rf(&[1], &[2]),
            lo_printed: true,
            derived_lo: rf(&[-1, 3], &[0, 2]),
            derived_hi: rf(&[1], &[2]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la_3_ninv",
            groups: vec![Group::Nash],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![dev("030", Role::LaI, "INN")],
            branch_lo: rf(&[-1, 3], &[1, 3]),
            branch_hi: rf(&[-1, 3], &[1, 3]),
            lo_printed: true,
            derived_lo: rf(&[-1, 3], &[1, 3]),
            derived_hi: rf(&[-1, 3], &[1, 3]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_ha_1_inv",
            groups: vec![Group::Nash],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![dev("120", Role::Ha, "INN")],
            branch_lo: rf(&[1, -1], &[1]),
            branch_hi: rf(&[2, -1], &[3]),
            lo_printed: true,
            derived_lo: rf(&[1, -1], &[1]),
            derived_hi: rf(&[2, -1], &[3]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la_20_ninv",
            groups: vec![Group::Nash],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![dev("120", Role::LaI, "INN")],
            branch_lo: rf(&[-1, 3], &[0, 2]),
            branch_hi: rf(&[-2, 7], &[1, 4]),
            lo_printed: true,
            derived_lo: rf(&[-1, 3], &[0, 2]),
            derived_hi: rf(&[-2, 7], &[1, 4]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la_02_ninv",
            groups: vec![Group::Nash],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![dev("120", Role::LaJ, "INN")],
            branch_lo: rf(&[-1, 3], &[0, 2]),
            branch_hi: rf(&[1, 1], &[4, -2]),
            lo_printed: true,
            derived_lo: rf(&[-1, 3], &[0, 2]),
            derived_hi: rf(&[2, -1], &[5, -4]),
            erratum: Some(Erratum::Transcription),
        },
        ConditionSpec {
            name: "alpha_ha_0_inv_la21",
            groups: vec![Group::Nash],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![dev("021", Role::Ha, "INN")],
            branch_lo: rf(&[2, -3], &[2]),
            branch_hi: rf(&[1, -1], &[2]),
            lo_printed: true,
            derived_lo: rf(&[1], &[4]),
            derived_hi: rf(&[1, -1], &[2]),
            erratum: Some(Erratum::Transcription),
        },
        ConditionSpec {
            name: "alpha_la_21_ninv",
            groups: vec![Group::Nash],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![dev("021", Role::LaI, "INN")],
            branch_lo: rf(&[-1, 3], &[0, 2]),
            branch_hi: rf(&[-1, 5], &[2, 2]),
            lo_printed: true,
            derived_lo: rf(&[-1, 3], &[0, 2]),
            derived_hi: rf(&[-1, 5], &[2, 2]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la_12_ninv",
            groups: vec![Group::Nash],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![dev("021", Role::LaJ, "INN")],
            branch_lo: rf(&[-1, 3], &[0, 2]),
            branch_hi: rf(&[1, 1], &[4, -2]),
            lo_printed: true,
            derived_lo: rf(&[-1, 3], &[0, 2]),
            derived_hi: rf(&[1, 1], &[4, -2]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_ha_1_inv_eq",
            groups: vec![Group::Nash],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![dev("111", Role::Ha, "INN")],
            branch_lo: rf(&[1, -1], &[1]),
            branch_hi: rf(&[2, -1], &[3]),
            lo_printed: false,
            derived_lo: rf(&[1, -1], &[1]),
            derived_hi: rf(&[2, -1], &[3]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la_eq_ninv",
            groups: vec![Group::Nash],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![dev("111", Role::LaI, "INN")],
            branch_lo: rf(&[-1, 3], &[0, 2]),
            branch_hi: rf(&[0, 1], &[1]),
            lo_printed: false,
            derived_lo: rf(&[-1, 3], &[0, 2]),
            derived_hi: rf(&[0, 1], &[1]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_ha0_la21_ninv",
            groups: vec![Group::NashCross],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![dev("021", Role::Ha, "NIN")],
            branch_lo: rf(&[3, -1], &[6, -4]),
            branch_hi: rf(&[3, -1], &[6, -4]),
            lo_printed: true,
            derived_lo: rf(&[3, -1], &[6, -4]),
            derived_hi: rf(&[3, -1], &[6, -4]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la2_ha0_inv",
            groups: vec![Group::NashCross],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![dev("021", Role::LaI, "NIN")],
            branch_lo: rf(&[0, 5], &[6]),
            branch_hi: rf(&[1, 3], &[6]),
            lo_printed: true,
            derived_lo: rf(&[0, 5], &[6]),
            derived_hi: rf(&[1, 3], &[6]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_ha0_la12_ninv",
            groups: vec![Group::NashCross],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![dev("021", Role::Ha, "NNI")],
            branch_lo: rf(&[3, -2], &[6, -5]),
            branch_hi: rf(&[3, -2], &[6, -5]),
            lo_printed: true,
            derived_lo: rf(&[3, -2], &[6, -5]),
            derived_hi: rf(&[3, -2], &[6, -5]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la1_ha0_inv",
            groups: vec![Group::NashCross],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![dev("021", Role::LaJ, "NNI")],
            branch_lo: rf(&[0, 2], &[3]),
            branch_hi: rf(&[1], &[3]),
            lo_printed: true,
            derived_lo: rf(&[0, 2], &[3]),
            derived_hi: rf(&[1], &[3]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_ha0_la3la0_ninv",
            groups: vec![Group::NashCross],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![dev("030", Role::Ha, "NIN")],
            branch_lo: rf(&[1], &[2, -1]),
            branch_hi: rf(&[1], &[2, -1]),
            lo_printed: true,
            derived_lo: rf(&[1], &[2, -1]),
            derived_hi: rf(&[1], &[2, -1]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la3_ha0la0_inv",
            groups: vec![Group::NashCross],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![dev("030", Role::LaI, "NIN")],
            branch_lo: rf(&[0, 1], &[1]),
            branch_hi: rf(&[0, 1], &[1]),
            lo_printed: true,
            derived_lo: rf(&[0, 1], &[1]),
            derived_hi: rf(&[0, 1], &[1]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_ha0_la0la3_ninv",
            groups: vec![Group::NashCross],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![dev("030", Role::Ha, "NNI")],
            branch_lo: rf(&[1], &[2]),
            branch_hi: rf(&[1], &[2]),
            lo_printed: true,
            derived_lo: rf(&[1], &[2]),
            derived_hi: rf(&[1], &[2]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la0_ha0la3_inv",
            groups: vec![Group::NashCross],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![dev("030", Role::LaJ, "NNI")],
            branch_lo: rf(&[1, -1], &[2]),
            branch_hi: rf(&[1, -1], &[2]),
            lo_printed: true,
            derived_lo: rf(&[0, 1], &[2]),
            derived_hi: rf(&[1, -1], &[2]),
            erratum: Some(Erratum::Transcription),
        },
        ConditionSpec {
            name: "alpha_ha1_la1la1_ninv",
            groups: vec![Group::NashCross],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![dev("111", Role::Ha, "NIN")],
            branch_lo: rf(&[3, -1], &[6, -4]),
            branch_hi: rf(&[3, -1], &[6, -4]),
            lo_printed: true,
            derived_lo: rf(&[3, -1], &[6, -4]),
            derived_hi: rf(&[3, -1], &[6, -4]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la1_ha1la1_inv",
            groups: vec![Group::NashCross],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![dev("111", Role::LaI, "NIN")],
            branch_lo: rf(&[1, 1], &[6]),
            branch_hi: rf(&[1, 1], &[6]),
            lo_printed: true,
            derived_lo: rf(&[0, 1], &[2]),
            derived_hi: rf(&[1, 1], &[6]),
            erratum: Some(Erratum::Transcription),
        },
        ConditionSpec {
            name: "alpha_ha1_la2la0_ninv",
            groups: vec![Group::NashCross],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![dev("120", Role::Ha, "NIN")],
            branch_lo: rf(&[3, 1], &[6, -2]),
            branch_hi: rf(&[3, 1], &[6, -2]),
            lo_printed: true,
            derived_lo: rf(&[3, 1], &[6, -2]),
            derived_hi: rf(&[3, 1], &[6, -2]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la2_ha1la0_inv",
            groups: vec![Group::NashCross],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![dev("120", Role::LaI, "NIN")],
            branch_lo: rf(&[0, 2], &[3]),
            branch_hi: rf(&[0, 2], &[3]),
            lo_printed: true,
            derived_lo: rf(&[0, 2], &[3]),
            derived_hi: rf(&[0, 2], &[3]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_ha1_la0la2_ninv",
            groups: vec![Group::NashCross],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![dev("120", Role::Ha, "NNI")],
            branch_lo: rf(&[3, -1], &[6, -4]),
            branch_hi: rf(&[3, -1], &[6, -4]),
            lo_printed: true,
            derived_lo: rf(&[3, -1], &[6, -4]),
            derived_hi: rf(&[3, -1], &[6, -4]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la0_ha1la2_inv",
            groups: vec![Group::NashCross],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![dev("120", Role::LaJ, "NNI")],
            branch_lo: rf(&[0, 1], &[3]),
            branch_hi: rf(&[0, 1], &[3]),
            lo_printed: true,
            derived_lo: rf(&[0, 1], &[3]),
            derived_hi: rf(&[0, 1], &[3]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_ha2_la1la0_ninv",
            groups: vec![Group::NashCross],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![dev("210", Role::Ha, "NIN")],
            branch_lo: rf(&[3, 1], &[6, -2]),
            branch_hi: rf(&[3, 1], &[6, -2]),
            lo_printed: true,
            derived_lo: rf(&[3, 1], &[6, -2]),
            derived_hi: rf(&[3, 1], &[6, -2]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la1_ha2la0_inv",
            groups: vec![Group::NashCross],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![dev("210", Role::LaI, "NIN")],
            branch_lo: rf(&[0, 1], &[3]),
            branch_hi: rf(&[0, 1], &[3]),
            lo_printed: true,
            derived_lo: rf(&[0, 1], &[3]),
            derived_hi: rf(&[0, 1], &[3]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_ha2_la1la0_ninv_la0inv",
            groups: vec![Group::NashCross],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![dev("210", Role::Ha, "NNI")],
            branch_lo: rf(&[3, 1], &[6, -2]),
            branch_hi: rf(&[3, 1], &[6, -2]),
            lo_printed: true,
            derived_lo: rf(&[3, 1], &[6, -2]),
            derived_hi: rf(&[3, 1], &[6, -2]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la0_ha2la1_inv",
            groups: vec![Group::NashCross],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![dev("210", Role::LaJ, "NNI")],
            branch_lo: rf(&[0, 1], &[6]),
            branch_hi: rf(&[1, -1], &[6]),
            lo_printed: true,
            derived_lo: rf(&[0, 1], &[6]),
            derived_hi: rf(&[1, -1], &[6]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_ha0_ninv_mixed",
            groups: vec![Group::Mixed],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![dev("030", Role::Ha, "NIN"), dev("030", Role::Ha, "NNI"), dev("021", Role::Ha, "NIN"), dev("021", Role::Ha, "NNI")],
            branch_lo: rf(&[144, -252, 138, -23], &[288, -576, 376, -80]),
            branch_hi: rf(&[144, -252, 138, -23], &[288, -576, 376, -80]),
            lo_printed: true,
            derived_lo: rf(&[2, -1], &[4, -3]),
            derived_hi: rf(&[2, -1], &[4, -3]),
            erratum: Some(Erratum::AveragingModel),
        },
        ConditionSpec {
            name: "alpha_la2_inv_mixed",
            groups: vec![Group::Mixed],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![dev("021", Role::LaI, "NIN"), dev("120", Role::LaI, "NIN")],
            branch_lo: rf(&[9, 18, -5], &[36, -12]),
            branch_hi: rf(&[12, 11, -3], &[36, -12]),
            lo_printed: true,
            derived_lo: rf(&[0, 3], &[4]),
            derived_hi: rf(&[1, 7], &[12]),
            erratum: Some(Erratum::CopiedThreshold),
        },
        ConditionSpec {
            name: "alpha_la1_inv_mixed",
            groups: vec![Group::Mixed],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![dev("210", Role::LaI, "NIN"), dev("111", Role::LaI, "NIN"), dev("021", Role::LaJ, "NNI")],
            branch_lo: rf(&[1, 7], &[18]),
            branch_hi: rf(&[1, 1], &[6]),
            lo_printed: true,
            derived_lo: rf(&[0, 1], &[2]),
            derived_hi: rf(&[1, 1], &[6]),
            erratum: Some(Erratum::AveragingModel),
        },
        ConditionSpec {
            name: "alpha_la3_inv_mixed",
            groups: vec![Group::Mixed],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![dev("030", Role::LaI, "NIN")],
            branch_lo: rf(&[0, 1], &[1]),
            branch_hi: rf(&[0, 1], &[1]),
            lo_printed: true,
            derived_lo: rf(&[0, 1], &[1]),
            derived_hi: rf(&[0, 1], &[1]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la0_inv_mixed",
            groups: vec![Group::Mixed],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![dev("210", Role::LaJ, "NNI"), dev("120", Role::LaJ, "NNI"), dev("030", Role::LaJ, "NNI")],
            branch_lo: rf(&[18, -15, 4], &[54, -36]),
            branch_hi: rf(&[21, -23, 8], &[54, -36]),
            lo_printed: true,
            derived_lo: rf(&[0, 1], &[3]),
            derived_hi: rf(&[2, -1], &[9]),
            erratum: Some(Erratum::CopiedThreshold),
        },
        ConditionSpec {
            name: "alpha_ha1_inv_mixed",
            groups: vec![Group::Mixed],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![dev("120", Role::Ha, "NIN"), dev("120", Role::Ha, "NNI"), dev("111", Role::Ha, "NIN")],
            branch_lo: rf(&[9, -5], &[18, -18, 4]),
            branch_hi: rf(&[9, -5], &[18, -18, 4]),
            lo_printed: true,
            derived_lo: rf(&[9, -1], &[18, -10]),
            derived_hi: rf(&[9, -1], &[18, -10]),
            erratum: Some(Erratum::AveragingModel),
        },
        ConditionSpec {
            name: "alpha_ha2_ninv_mixed",
            groups: vec![Group::Mixed],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![dev("210", Role::Ha, "NIN"), dev("210", Role::Ha, "NNI")],
            branch_lo: rf(&[3, 1], &[6, -2]),
            branch_hi: rf(&[3, 1], &[6, -2]),
            lo_printed: true,
            derived_lo: rf(&[3, 1], &[6, -2]),
            derived_hi: rf(&[3, 1], &[6, -2]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_ha3_ninv",
            groups: vec![Group::Level1, Group::Level1NoOtherInfo],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![lvl("300", Role::Ha)],
            branch_lo: rf(&[1, 3], &[2, 2]),
            branch_hi: rf(&[2, 1], &[3]),
            lo_printed: true,
            derived_lo: rf(&[1, 3], &[2, 2]),
            derived_hi: rf(&[2, 1], &[3]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la0_inv_ha3",
            groups: vec![Group::Level1],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![lvl("300", Role::LaI)],
            branch_lo: rf(&[-1, 5], &[2, 2]),
            branch_hi: rf(&[0, 1], &[1]),
            lo_printed: true,
            derived_lo: rf(&[-1, 5], &[2, 2]),
            derived_hi: rf(&[0, 1], &[1]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_ha2_ninv",
            groups: vec![Group::Level1, Group::Level1NoOtherInfo],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![lvl("210", Role::Ha)],
            branch_lo: rf(&[2, 3], &[3, 2]),
            branch_hi: rf(&[7], &[9, -2]),
            lo_printed: true,
            derived_lo: rf(&[2, 3], &[3, 2]),
            derived_hi: rf(&[7], &[9, -2]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la1_inv_ha2",
            groups: vec![Group::Level1],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![lvl("210", Role::LaI)],
            branch_lo: rf(&[-5, 19], &[6, 8]),
            branch_hi: rf(&[-3, 15], &[8, 4]),
            lo_printed: true,
            derived_lo: rf(&[-5, 19], &[6, 8]),
            derived_hi: rf(&[-3, 15], &[8, 4]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la0_inv_ha2",
            groups: vec![Group::Level1],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![lvl("210", Role::LaJ)],
            branch_lo: rf(&[-3, 17], &[6, 7]),
            branch_hi: rf(&[2, 7], &[10, -1]),
            lo_printed: true,
            derived_lo: rf(&[-3, 17], &[6, 7]),
            derived_hi: rf(&[2, 7], &[10, -1]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_ha1_la2la0_ninv_l1",
            groups: vec![Group::Level1],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![lvl("120", Role::Ha)],
            branch_lo: rf(&[8, -3], &[9, -3]),
            branch_hi: rf(&[7, -1], &[9, -3]),
            lo_printed: true,
            derived_lo: rf(&[8, -3], &[9, -3]),
            derived_hi: rf(&[7, -1], &[9, -3]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la2_ha1la0_inv_l1",
            groups: vec![Group::Level1],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![lvl("120", Role::LaI)],
            branch_lo: rf(&[-7, 23], &[6, 10]),
            branch_hi: rf(&[-6, 21], &[7, 8]),
            lo_printed: true,
            derived_lo: rf(&[-7, 23], &[6, 10]),
            derived_hi: rf(&[-6, 21], &[7, 8]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la0_ha1la2_inv_l1",
            groups: vec![Group::Level1],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![lvl("120", Role::LaJ)],
            branch_lo: rf(&[-3, 19], &[6, 8]),
            branch_hi: rf(&[2, 9], &[11, -2]),
            lo_printed: true,
            derived_lo: rf(&[-3, 19], &[6, 8]),
            derived_hi: rf(&[2, 9], &[11, -2]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_ha1_la1_ninv",
            groups: vec![Group::Level1],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![lvl("111", Role::Ha)],
            branch_lo: rf(&[8, -4], &[9, -4]),
            branch_hi: rf(&[7, -2], &[9, -4]),
            lo_printed: true,
            derived_lo: rf(&[8, -4], &[9, -4]),
            derived_hi: rf(&[7, -2], &[9, -4]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la1_ha1_inv",
            groups: vec![Group::Level1],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![lvl("111", Role::LaI)],
            branch_lo: rf(&[-1, 13], &[9, 3]),
            branch_hi: rf(&[-1, 13], &[9, 3]),
            lo_printed: true,
            derived_lo: rf(&[-5, 21], &[6, 9]),
            derived_hi: rf(&[-1, 13], &[9, 3]),
            erratum: Some(Erratum::Transcription),
        },
        ConditionSpec {
            name: "alpha_ha0_la3_ninv",
            groups: vec![Group::Level1],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![lvl("030", Role::Ha)],
            branch_lo: rf(&[4], &[4, 1]),
            branch_hi: rf(&[5, -2], &[6, -3]),
            lo_printed: true,
            derived_lo: rf(&[4], &[4, 1]),
            derived_hi: rf(&[5, -2], &[6, -3]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_la0_la3_inv",
            groups: vec![Group::Level1],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![lvl("030", Role::LaJ)],
            branch_lo: rf(&[2, 1], &[4, -1]),
            branch_hi: rf(&[2, 1], &[4, -1]),
            lo_printed: true,
            derived_lo: rf(&[-1, 7], &[2, 3]),
            derived_hi: rf(&[2, 1], &[4, -1]),
            erratum: Some(Erratum::Transcription),
        },
        ConditionSpec {
            name: "alpha_la3_inv",
            groups: vec![Group::Level1, Group::Level1NoOtherInfo],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![lvl("030", Role::LaI)],
            branch_lo: rf(&[-3, 9], &[3, 5]),
            branch_hi: rf(&[-3, 9], &[3, 5]),
            lo_printed: true,
            derived_lo: rf(&[-3, 9], &[3, 5]),
            derived_hi: rf(&[-3, 9], &[3, 5]),
            erratum: None,
        },
        ConditionSpec {
            name: "alpha_ha0_la2la1_ninv",
            groups: vec![Group::Level1],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![lvl("021", Role::Ha)],
            branch_lo: rf(&[8, -4], &[9, -4]),
            branch_hi: rf(&[7, -2], &[9, -4]),
            lo_printed: true,
            derived_lo: rf(&[4], &[4, 1]),
            derived_hi: rf(&[5, -2], &[6, -3]),
            erratum: Some(Erratum::Transcription),
        },
        ConditionSpec {
            name: "alpha_la1_ha0la2_inv",
            groups: vec![Group::Level1],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![lvl("021", Role::LaJ)],
            branch_lo: rf(&[3, 7], &[12, -2]),
            branch_hi: rf(&[3, 7], &[12, -2]),
            lo_printed: true,
            derived_lo: rf(&[-5, 23], &[6, 10]),
            derived_hi: rf(&[3, 7], &[12, -2]),
            erratum: Some(Erratum::Transcription),
        },
        ConditionSpec {
            name: "alpha_la2_ha0la1_inv",
            groups: vec![Group::Level1],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![lvl("021", Role::LaI)],
            branch_lo: rf(&[-4, 19], &[8, 7]),
            branch_hi: rf(&[-4, 19], &[8, 7]),
            lo_printed: true,
            derived_lo: rf(&[-7, 25], &[6, 11]),
            derived_hi: rf(&[-4, 19], &[8, 7]),
            erratum: Some(Erratum::Transcription),
        },
        ConditionSpec {
            name: "alpha_la0_inv_noinf",
            groups: vec![Group::Level1NoOtherInfo],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![lvl("300", Role::LaI), lvl("210", Role::LaJ), lvl("120", Role::LaJ), lvl("030", Role::LaJ)],
            branch_lo: rf(&[-144, 1062, 2786, 1257, -353], &[576, 1872, 1832, 312, -224]),
            branch_hi: rf(&[194, 545, -257, 32, -1], &[880, -468, 78, -4]),
            lo_printed: true,
            derived_lo: rf(&[-2, 12], &[4, 5]),
            derived_hi: rf(&[5, 14], &[21, -3]),
            erratum: Some(Erratum::AveragingModel),
        },
        ConditionSpec {
            name: "alpha_la1_inv_noinf",
            groups: vec![Group::Level1NoOtherInfo],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![lvl("210", Role::LaI), lvl("111", Role::LaI), lvl("021", Role::LaJ)],
            branch_lo: rf(&[-225, 1731, 1091, -77], &[972, 1458, 162, -72]),
            branch_hi: rf(&[-102, 1733, 584, -55], &[1296, 864, 36, -36]),
            lo_printed: true,
            derived_lo: rf(&[-5, 21], &[6, 9]),
            derived_hi: rf(&[-1, 35], &[29, 5]),
            erratum: Some(Erratum::AveragingModel),
        },
        ConditionSpec {
            name: "alpha_ha1_ninv_noinf",
            groups: vec![Group::Level1NoOtherInfo],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![lvl("120", Role::Ha), lvl("111", Role::Ha)],
            branch_lo: rf(&[144, -119, 24], &[162, -126, 24]),
            branch_hi: rf(&[63, -38, 5], &[81, -63, 12]),
            lo_printed: true,
            derived_lo: rf(&[16, -7], &[18, -7]),
            derived_hi: rf(&[14, -3], &[18, -7]),
            erratum: Some(Erratum::AveragingModel),
        },
        ConditionSpec {
            name: "alpha_la2_inv_noinf",
            groups: vec![Group::Level1NoOtherInfo],
            choice: Choice::Invest,
            direction: Direction::Ge,
            states: vec![lvl("120", Role::LaI), lvl("021", Role::LaI)],
            branch_lo: rf(&[-80, 209, 351], &[96, 244, 140]),
            branch_hi: rf(&[-76, 227, 299], &[112, 226, 112]),
            lo_printed: true,
            derived_lo: rf(&[-14, 48], &[12, 21]),
            derived_hi: rf(&[-2, 8], &[3, 3]),
            erratum: Some(Erratum::AveragingModel),
        },
        ConditionSpec {
            name: "alpha_ha0_ninv_noinf",
            groups: vec![Group::Level1NoOtherInfo],
            choice: Choice::NotInvest,
            direction: Direction::Le,
            states: vec![lvl("030", Role::Ha), lvl("021", Role::Ha)],
            branch_lo: rf(&[34, -12, -2], &[36, -7, -4]),
            branch_hi: rf(&[87, -71, 14], &[108, -102, 24]),
            lo_printed: true,
            derived_lo: rf(&[4], &[4, 1]),
            derived_hi: rf(&[5, -2], &[6, -3]),
            erratum: Some(Erratum::AveragingModel),
        },
    ]
}
