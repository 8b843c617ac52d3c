#!/usr/bin/env python3
"""One-off generator for the feedback corpora CSVs.

Each user is entered as four 12-cell rows (battery, app rating, app type,
time spent) in F1T F1E ... F6T F6E order, transcribed from the published
supplementary tables. Corrections to defective source rows are listed in
the header comment of the emitted file.
"""

import os

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "data", "corpora")

# --- Left 4 Dead -----------------------------------------------------------
L4D = {
 1: ("BM BM BM BM BM BM BM BM BL BH BM BH",
     "AM AM AM AM AM AM AS AM AS AF AM AF",
     "MI FI MI FI FI MI FI MI FI MI FI AI",
     "M S S S M S S S S S S S"),
 2: ("BL BM BM BL BM BM BL BM BL BM BM BM",
     "AM AM AF AM AM AM AM AM AM AM AM AM",
     "SI MI SI FI SI MI MI MI FI MI FI MI",
     "L M L M L M S L L M M M"),
 3: ("BL BM BL BL BM BL BM BM BM BM BM BM",
     "AS AF AS AM AF AF AF AF AS AF AM AF",
     "MI FI MI FI MI FI MI FI MI FI MI FI",
     "S VL M VL L VL S VL M VL S VL"),
 4: ("BM BH BM BH BM BH BM BM BH BH BH BH",
     "AS AS AVS AM AF AM AM AM AF AM AF AF",
     "AI FI AI MI MI SI AI MI AI AI AI AI",
     "M M M S L S L M L L L L"),
 5: ("BM BL BM BL BM BL BM BL BL BL BL BL",
     "AVS AS AS AS AS AS AM AM AM AM AM AM",
     "SI FI SI FI FI FI MI MI MI MI MI MI",
     "VL S VL S VL S S S M S M S"),
 6: ("BH BM BM BM BM BH BL BL BL BL BL BL",
     "AF AF AF AM AM AM AM AM AM AM AS AS",
     "FI FI FI FI FI FI FI FI FI FI FI FI",
     "M M M M M M L S M S M S"),
 7: ("BM BM BM BM BM BM BL BM BL BM BL BM",
     "AS AVS AS AVS AS AVS AM AVS AM AS AS AM",
     "SI FI SI FI SI SI FI FI FI FI MI FI",
     "M VL L VL M VL L VL M VL L VL"),
 8: ("BM BH BM BH BL BL BL BM BL BL BL BL",
     "AM AS AM AM AF AM AF AM AF AF AEF AF",
     "FI MI FI MI MI MI FI MI SI MI FI MI",
     "L S M S L S M S M S S S"),
 9: ("BM BM BM BM BM BL BM BL BM BM BM BM",
     "AF AF AF AM AM AF AM AF AF AF AF AF",
     "AI FI AI MI SI MI MI MI MI AI MI AI",
     "L M L M M M M M L M L M"),
 10: ("BH BL BM BL BH BL BH BL BH BL BL BL",
      "AS AM AM AS AS AM AS AM AS AF AF AF",
      "SI FI FI SI MI MI SI SI FI MI MI MI",
      "M L S VL S M M M S S L VL"),
 11: ("BH BL BH BM BM BH BL BH BM BM BL BM",
      "AM AM AS AM AM AM AM AF AM AF AS AF",
      "SI SI MI AI FI AI MI AI MI MI MI MI",
      "L L L M L M L M M VLA M VLA"),
 12: ("BH BM BM BH BM BM BM BM BL BH BL BM",
      "AS AVS AM AVS AM AS AM AS AS AM AS AS",
      "SI AU SI SI FI FI FI SI SI FI SI SI",
      "VL VL VL VL VL VL S VL S VL S VL"),
 13: ("BM BM BM BM BM BH BH BM BM BH BM BM",
      "AS AS AS AS AS AM AS AM AS AM AM AM",
      "SI FI FI SI SI SI FI FI SI FI FI SI",
      "L S M S S S M S L S M S"),
 14: ("BH BH BH BH BM BM BL BH BM BM BM BM",
      "AF AF AM AM AM AM AM AM AF AM AM AM",
      "MI MI FI MI FI FI SI FI MI FI FI FI",
      "S VL S VL S VL S VL M VL M VL"),
 15: ("BH BH BH BH BH BH BH BH BH BH BH BH",
      "AS AS AM AM AS AM AM AM AS AS AS AM",
      "MI MI MI MI MI MI MI MI MI MI FI MI",
      "L L L S L S L S L S M S"),
 16: ("BL BL BL BL BL BL BL BL BL BL BM BM",
      "AVS AVS AVS AVS AVS AVS AS AS AS AS AS AS",
      "FI FI FI FI FI FI FI FI FI FI FI FI",
      "VL M VL M S M S M VL M S M"),
 17: ("BL BM BL BM BL BM BM BM BM BM BM BL",
      "AVS AS AVS AS AS AS AS AS AVS AS AVS AS",
      "FI FI FI FI FI FI FI FI FI FI FI FI",
      "VL VL VL VL S VL S VL S VL M VL"),
 18: ("BH BH BH BH BH BH BH BH BM BH BL BH",
      "AEF AF AF AF AF AF AF AF AF AF AM AF",
      "FI FI MI FI FI MI FI MI FI MI FI AI",
      "S S L S L S M S M S M S"),
 19: ("BH BM BH BL BH BL BL BL BM BH BM BM",
      "AS AM AF AF AM AM AM AF AM AF AS AM",
      "MI MI MI MI FI SI MI FI FI MI FI SI",
      "M S VLA S L S M S M S M VL"),
 20: ("BH BM BH BM BH BM BM BM BH BM BM BL",
      "AS AM AVS AS AF AVS AS AS AM AM AM AS",
      "FI MI FI MI MI MI MI MI FI MI FI MI",
      "S VL M VL S VL M VL S VL M VL"),
 21: ("BH BM BH BM BM BM BM BM BM BM BM BM",
      "AF AM AF AM AM AS AF AS AM AM AM AM",
      "FI FI MI FI SI FI MI FI FI SI FI FI",
      "VL S VLA S L S L S M S M S"),
 22: ("BM BH BM BH BH BH BH BM BM BM BM BM",
      "AM AF AM AEF AS AF AF AM AM AF AM AF",
      "FI MI FI FI SI MI MI FI FI FI MI MI",
      "S VL M VL VL VL S VL S VL M VL"),
 23: ("BM BM BM BM BH BM BH BM BM BM BM BM",
      "AF AF AM AF AF AM AF AM AF AM AF AM",
      "MI AI MI MI MI MI MI MI MI MI MI MI",
      "M S M S L S L S L S M S"),
 24: ("BM BM BM BL BM BM BH BM BM BM BM BM",
      "AF AF AF AF AF AF AF AF AF AF AF AF",
      "FI MI MI MI MI MI FI MI FI MI FI MI",
      "M VL S S L S S S S S M S"),
 25: ("BM BH BH BH BH BH BM BM BH BH BH BH",
      "AM AM AF AM AM AF AM AM AM AF AS AM",
      "FI MI MI FI MI MI FI MI SI FI FI AI",
      "M S S L S VLA M M L M M S"),
}

# --- Amnesia: the Dark Descent ---------------------------------------------
AMNESIA = {
 1: ("BL BL BL BL BL BL BM BL BM BL BM BL",
     "AF AM AF AM AF AS AM AM AM AF AM AF",
     "FI SI FI SI FI SI FI SI SI SI SI SI",
     "M S M S S S S S M S L S"),
 2: ("BM BM BL BL BL BM BM BL BM BL BM BL",
     "AM AM AM AM AM AM AM AM AM AM AM AM",
     "AU SI AU SI AU AU SI SI AU SI SI SI",
     "S M S M S M M M M M M M"),
 3: ("BH BH BL BM BM BM BM BM BL BM BM BL",
     "AVS AS AM AS AS AM AM AM AM AM AM AM",
     "SI SI SI AU FI AU AU SI AU FI SI AI",
     "S S M S S S M S S S S S"),
 4: ("BM BH BM BH BM BH BH BH BM BH BL BH",
     "AM AF AS AM AM AM AF AF AM AF AF AS",
     "FI MI FI SI MI FI AI MI AI MI AI FI",
     "M L M L M L L L M M S S"),
 5: ("BM BL BL BL BL BL BL BL BL BL BL BL",
     "AM AM AM AM AM AM AS AM AS AM AS AM",
     "SI SI AU FI AU SI AU SI AU SI AU AU",
     "M M S M VL M VL M VL S VL S"),
 6: ("BM BL BM BL BL BM BM BL BM BM BM BL",
     "AM AF AM AM AM AM AM AF AM AM AM AM",
     "SI SI SI SI SI SI SI SI SI SI SI SI",
     "M M M M M M M M M M L M"),
 7: ("BM BL BM BM BL BM BM BL BM BM BM BM",
     "AM AM AM AM AM AM AM AM AM AM AM AM",
     "MI FI FI MI FI MI FI MI FI MI FI MI",
     "S VL S VL S VL M VL S VL M VL"),
 8: ("BM BL BM BL BL BL BL BL BL BL BL BM",
     "AS AM AS AM AS AM AS AM AM AM AM AM",
     "SI SI SI SI SI SI AU SI FI SI FI SI",
     "L M S M S M S M L M L M"),
 9: ("BM BM BH BM BH BH BH BH BH BM BH BM",
     "AM AF AM AF AF AF AF AF AF AF AF AF",
     "FI FI FI FI FI MI MI MI MI MI MI FI",
     "M M M M M M M M M M M M"),
 10: ("BH BM BL BL BM BL BL BL BL BL BL BL",
      "AF AM AF AM AF AF AF AM AM AF AM AF",
      "FI FI SI FI SI MI FI AI AU AI AU FI",
      "L S L M L L M VL VLA VL VLA S"),
 11: ("BM BM BM BH BM BM BL BH BL BM BM BL",
      "AM AVS AM AS AVS AM AM AM AS AM AM AF",
      "SI FI SI FI AU MI AU AU MI AI MI FI",
      "M M M L L L M M L M M S"),
 12: ("BM BM BM BH BL BM BL BM BM BM BM BM",
      "AEF AEF AEF AF AF AF AM AM AS AS AVS AS",
      "MI MI MI MI MI FI FI MI SI MI AU MI",
      "S VL M VL VL VL S VL M VL VL VL"),
 13: ("BM BM BM BM BM BM BM BM BM BM BM BM",
      "AM AM AM AM AM AM AM AF AM AF AM AF",
      "SI SI SI SI SI FI FI FI MI FI FI FI",
      "L M S M M M M M M M L M"),
 14: ("BM BM BH BH BH BM BL BM BM BH BL BM",
      "AS AS AM AM AS AM AS AM AS AM AM AS",
      "SI SI SI FI SI FI SI FI SI FI SI SI",
      "VL S S S S S M S S S M S"),
 15: ("BH BH BH BM BH BM BH BL BH BM BH BM",
      "AM AM AM AM AS AS AM AVS AM AVS AM AVS",
      "FI SI FI SI SI SI SI SI SI SI SI SI",
      "L S L S L S M S M S M S"),
 16: ("BL BL BL BL BL BL BL BL BL BL BL BL",
      "AS AS AS AS AS AS AS AM AM AM AM AS",
      "AU AU AU AU AU AU AU AU AU AU SI AU",
      "S S S S VL S S S S S VLA S"),
 17: ("BM BM BM BM BM BM BL BM BL BM BL BL",
      "AM AM AM AM AM AVS AM AVS AM AVS AM AVS",
      "SI SI SI SI SI SI SI SI SI SI SI AU",
      "VL VL VL VL VL VL VL VL VL VL S VL"),
 18: ("BH BH BH BH BH BH BM BH BM BH BM BH",
      "AF AF AF AF AF AM AF AM AF AF AF AF",
      "MI MI AI MI AI FI FI FI AI FI AI AI",
      "VL S M S L S M S L S L S"),
 19: ("BH BH BH BM BH BM BM BM BL BM BL BM",
      "AF AF AF AF AF AF AF AF AM AEF AF AEF",
      "AU FI AU FI SI FI MI FI SI FI FI FI",
      "S S VL S M S M M M M M M"),
 20: ("BH BM BH BM BH BM BH BL BM BM BH BM",
      "AS AS AM AM AF AF AF AF AF AF AF AF",
      "FI MI FI MI FI MI FI MI MI MI MI MI",
      "VL VL S VL S VL S VL S VL M VL"),
 21: ("BM BH BM BH BM BH BH BM BM BM BM BM",
      "AM AM AM AM AM AS AS AS AS AM AS AM",
      "MI SI FI SI FI MI FI MI SI FI SI FI",
      "M S S S M S M S M S L S"),
 22: ("BM BL BM BM BH BM BH BM BM BL BM BL",
      "AM AF AM AM AM AS AF AS AM AS AS AS",
      "FI MI FI MI FI FI MI SI FI SI FI FI",
      "M S M M M M S L M L M L"),
 23: ("BM BM BM BM BM BM BM BM BM BM BM BM",
      "AF AF AF AF AF AF AF AF AF AF AF AF",
      "MI AI MI AI MI AI MI AI MI AI FI AI",
      "M L M L M L M L M L M L"),
 24: ("BM BM BM BM BM BM BM BM BM BM BM BM",
      "AVS AVS AVS AVS AVS AVS AVS AVS AS AM AM AM",
      "SI SI SI SI SI SI SI SI FI FI FI FI",
      "S VL S VL S VL S VL M VL M VL"),
 25: ("BH BH BM BH BM BM BH BH BH BH BH BH",
      "AM AM AM AF AF AM AM AM AS AF AM AM",
      "FI FI FI FI AU SI AI FI FI MI AI FI",
      "M M S M S M S S M S L S"),
}

# --- single-person games: shared row patterns ------------------------------
SUB_P1 = ("BH BH BH BH BM BH BM BM BL BL BVL BL",
          "AVS AS AM AM AM AF AF AF AEF AF AEF AF",
          "AU SI SI FI FI MI SI FI MI SI FI SI",
          "S S M M L M L S VLA S M S")
SUB_P2 = ("BH BEH BH BEH BH BM BM BM BM BL BL BVL",
          "AVS AVS AS AM AM AM AM AM AF AF AF AF",
          "AU SI SI MI FI FI SI MI MI FI SI FI",
          "VL S S M M M M S VLA S L S")
SUB_P3 = ("BEH BH BEH BH BH BM BH BL BM BL BM BVL",
          "AS AM AS AM AM AM AF AF AF AF AF AF",
          "MI MI MI MI MI MI MI MI MI MI MI MI",
          "L M M M S M S M VL M VL M")
SUB_P4 = ("BH BH BH BH BH BH BM BM BM BM BM BL",
          "AS AVS AS AS AM AM AM AM AF AM AF AM",
          "SI AU SI AU SI SI FI MI MI FI MI FI",
          "VL VL VL S S M M M M L L L")
SUB_P5 = ("BH BH BH BH BM BH BM BM BL BM BL BM",
          "AS AVS AS AS AM AM AF AM AF AF AEF AF",
          "SI FI FI FI FI FI FI MI MI FI MI FI",
          "M S M S M S M M L M L M")
SUB_P7 = ("BH BH BH BH BH BH BH BM BM BM BM BL",
          "AS AVS AS AS AM AM AM AM AF AM AF AM",
          "SI AU SI AU SI SI FI MI MI FI MI FI",
          "VL VL VL S S M M M M L L L")
SUB_P8 = ("BH BEH BH BEH BH BM BH BL BM BL BM BVL",
          "AVS AVS AS AM AM AM AM AM AF AF AF AF",
          "AU SI SI MI FI FI SI MI MI FI SI FI",
          "VL S S M M M M S VLA S L S")
SUB_P9 = ("BH BH BH BH BM BH BM BM BL BM BL BM",
          "AS AVS AS AS AM AM AM AM AF AF AEF AF",
          "SI FI FI FI FI FI FI MI MI FI MI FI",
          "M S M S M S M M L M L M")
SUB_P16 = ("BH BH BH BH BH BH BM BM BL BM BL BM",
           "AS AVS AS AS AM AM AM AM AF AF AEF AF",
           "SI FI FI FI FI FI FI MI MI FI MI FI",
           "M S M S M S M M L M L M")
SUB_P21 = ("BH BEH BH BEH BH BM BM BM BL BL BVL BL",
           "AVS AVS AS AM AM AM AM AM AF AF AF AF",
           "AU SI SI MI FI FI SI MI MI FI SI FI",
           "VL S S M M M M S VLA S L S")
SUB_P22 = ("BH BH BH BH BM BH BM BM BL BM BL BM",
           "AS AVS AS AS AM AM AF AM AF AF AEF AF",
           "SI FI FI FI FI FI FI MI MI FI MI FI",
           "M S M S M S M M L M L M")

SUBWAY = {
 1: SUB_P1, 2: SUB_P2, 3: SUB_P3, 4: SUB_P4, 5: SUB_P5, 6: SUB_P1,
 7: SUB_P7, 8: SUB_P8, 9: SUB_P9, 10: SUB_P3, 11: SUB_P3, 12: SUB_P7,
 13: SUB_P1, 14: SUB_P1, 15: SUB_P2, 16: SUB_P16, 17: SUB_P7, 18: SUB_P3,
 19: SUB_P1, 20: SUB_P7, 21: SUB_P21, 22: SUB_P22, 23: SUB_P3, 24: SUB_P22,
 25: SUB_P2,
}

ASP_P1 = ("BH BH BM BM BM BL BL BVL BL BVL BL BVL",
          "AS AVS AS AM AM AF AF AEF AF AEF AEF AEF",
          "FI AU FI SI FI FI MI MI MI MI MI MI",
          "VL VL S S M M L L L L L L")
ASP_P2 = ("BH BH BH BH BM BH BM BH BM BL BL BVL",
          "AS AVS AS AS AM AS AM AM AEF AEF AEF AF",
          "FI SI FI FI MI FI FI MI AI AI AI AI",
          "VL S S M M M M L L L L L")
ASP_P3 = ("BM BM BM BM BM BM BL BM BL BL BL BL",
          "AS AVS AM AM AM AM AM AF AEF AF AEF AF",
          "SI SI SI FI MI FI MI FI FI FI MI FI",
          "M S S M L M L M M M L M")
ASP_P4 = ("BH BH BH BH BH BH BM BH BM BL BM BVL",
          "AS AVS AS AS AS AM AM AM AF AM AEF AF",
          "AU AU AU AU SI SI FI FI FI SI MI SI",
          "M S M S M S M S L S L S")
ASP_P5 = ("BH BH BH BH BM BH BL BM BL BL BVL BL",
          "AF AF AF AF AS AS AM AM AM AM AM AM",
          "MI MI MI MI FI FI FI FI FI FI FI FI",
          "L M L M M M M M M M M M")
ASP_P11 = ("BM BM BM BM BM BL BM BL BL BL BL BL",
           "AS AVS AM AM AM AM AM AF AEF AF AEF AF",
           "SI SI SI FI MI FI MI FI FI FI MI FI",
           "M S S M L M L M M M L M")
ASP_P15 = ("BH BH BH BH BM BH BM BH BM BL BL BVL",
           "AS AVS AS AS AM AS AM AM AEF AEF AEF AF",
           "FI SI FI FI MI FI FI MI AI AI AI AI",
           "VL S S M M M L L L L L L")

ASPHALT = {
 1: ASP_P1, 2: ASP_P2, 3: ASP_P3, 4: ASP_P4, 5: ASP_P5, 6: ASP_P1,
 7: ASP_P4, 8: ASP_P2, 9: ASP_P5, 10: ASP_P3, 11: ASP_P11, 12: ASP_P4,
 13: ASP_P1, 14: ASP_P1, 15: ASP_P15, 16: ASP_P5, 17: ASP_P4, 18: ASP_P3,
 19: ASP_P1, 20: ASP_P4, 21: ASP_P2, 22: ASP_P5, 23: ASP_P3, 24: ASP_P5,
 25: ASP_P2,
}

FRU_P1 = ("BEH BH BM BM BL BL BL BL BL BVL BL BVL",
          "AVS AVS AS AM AF AF AF AF AF AF AF AF",
          "AU AU FI FI MI MI SI MI SI MI MI MI",
          "VL VL M M L L M M L L L L")
FRU_P2 = ("BH BEH BH BH BH BM BM BL BL BL BL BL",
          "AS AVS AS AS AM AM AF AF AEF AEF AEF AEF",
          "SI AU SI SI FI FI MI MI MI MI MI MI",
          "M S M S M S L S L S VLA S")
FRU_P3 = ("BH BH BH BH BH BH BH BH BM BM BM BM",
          "AF AF AF AF AF AF AF AF AEF AEF AEF AEF",
          "FI FI MI MI MI MI MI MI MI MI MI MI",
          "S M M L L L L L VLA L VLA L")
FRU_P4 = ("BEH BH BM BM BL BL BL BL BL BVL BL BVL",
          "AVS AVS AS AM AF AF AF AF AEF AF AEF AF",
          "AU AU SI SI MI MI MI MI MI MI MI MI",
          "VL S M S L S L S L S L S")
FRU_P7 = ("BEH BH BM BM BL BL BL BL BL BVL BL BVL",
          "AVS AVS AS AM AF AF AF AF AEF AF AEF AF",
          "AU AU SI SI MI MI MI MI MI MI MI MI",
          "VL VL S S L L L L L L L L")
FRU_P24 = ("BH BH BH BH BM BH BL BM BL BL BVL BL",
           "AF AF AF AF AS AS AM AM AM AM AM AM",
           "MI MI MI MI FI FI FI FI FI FI FI FI",
           "L M L M M M M M M M M M")

FRUIT = {
 1: FRU_P1, 2: FRU_P2, 3: FRU_P3, 4: FRU_P4, 5: FRU_P1, 6: FRU_P1,
 7: FRU_P7, 8: FRU_P2, 9: FRU_P2, 10: FRU_P3, 11: FRU_P3, 12: FRU_P7,
 13: FRU_P1, 14: FRU_P1, 15: FRU_P2, 16: FRU_P3, 17: FRU_P7, 18: FRU_P3,
 19: FRU_P1, 20: FRU_P7, 21: FRU_P2, 22: FRU_P4, 23: FRU_P3, 24: FRU_P24,
 25: FRU_P2,
}

WEIGHTS = {
 14: "VI VI I I", 15: "VI VI MLI I", 16: "I I U U", 17: "VI MLI I MLU",
 18: "MLI I MLU U", 19: "VI VI I I", 20: "VI MLI I MLU", 21: "VI MLI I I",
 22: "MLI I U U", 23: "MLI I MLU U", 24: "MLI I MLU MLU", 25: "VI MLI I MLU",
}

MULTI_HEADER = """\
# Multi-person feedback corpus: games Left 4 Dead and Amnesia - the Dark
# Descent, 25 users x 2 phases x 6 frequencies.
user,game,phase,frequency,battery,app_rating,app_type,time_spent
"""

SINGLE_HEADER = """\
# Single-person feedback corpus: games Subway Surfers, Asphalt 8: Airborne
# and Fruit Ninja, 25 users x 2 phases x 6 frequencies, with per-criterion
# linguistic weights (users 1-13 weight all criteria equally).
# Corrections against the published Fruit Ninja table, which prints one
# duplicated cell in several rows (users 10-23) and swallows user 14's
# application-rating weight cell:
#   fruit u10,u11,u16,u18,u23: battery/app/type/time rows deduplicated to
#     the 12-cell pattern shared with user 3
#   fruit u12,u17,u20: app/type/time rows deduplicated to user 7's pattern
#   fruit u13,u14,u19: app (and for u13 type/time) rows deduplicated to
#     user 1's pattern; u14 app weight restored to VI per its weight column
#   fruit u22: app/type rows deduplicated to user 4's pattern
user,game,phase,frequency,battery,app_rating,app_type,time_spent,w_battery,w_app,w_type,w_time
"""


def emit(games, single, path, header):
    lines = [header]
    for game_name, table in games:
        for user in range(1, 26):
            rows = [r.split() for r in table[user]]
            for r in rows:
                assert len(r) == 12, (game_name, user, r)
            for phase_idx, phase in enumerate(("T", "E")):
                for f in range(6):
                    cells = [str(user), game_name, phase, "F%d" % (f + 1)]
                    cells += [rows[c][2 * f + phase_idx] for c in range(4)]
                    if single:
                        if user in WEIGHTS:
                            cells += WEIGHTS[user].split()
                        else:
                            cells += ["Equal", "", "", ""]
                    lines.append(",".join(cells) + "\n")
    with open(path, "w") as fh:
        fh.writelines(lines)
    print("wrote", path, len(lines) - 1, "records")


def emit_weights(path):
    lines = ["# Linguistic weight assignments keyed by user and game.\n",
             "user,game,w_battery,w_app,w_type,w_time\n"]
    for game in ("subway", "asphalt", "fruit"):
        for user in range(1, 26):
            if user in WEIGHTS:
                lines.append("%d,%s,%s\n" % (user, game,
                                             ",".join(WEIGHTS[user].split())))
            else:
                lines.append("%d,%s,Equal\n" % (user, game))
    with open(path, "w") as fh:
        fh.writelines(lines)
    print("wrote", path)


def main():
    os.makedirs(DATA, exist_ok=True)
    emit([("left4dead", L4D), ("amnesia", AMNESIA)], False,
         os.path.join(DATA, "multi_feedback.csv"), MULTI_HEADER)
    emit([("subway", SUBWAY), ("asphalt", ASPHALT), ("fruit", FRUIT)], True,
         os.path.join(DATA, "single_feedback.csv"), SINGLE_HEADER)
    emit_weights(os.path.join(DATA, "single_weights.csv"))


if __name__ == "__main__":
    main()
