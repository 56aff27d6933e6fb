"""Regenerate src/zbeta/data/knots.tsv from the KnotInfo/LinkInfo CSV dumps.

Needs the ``database_knotinfo`` package (not a runtime dependency):

    pip install database_knotinfo
    python tools/make_knot_table.py > src/zbeta/data/knots.tsv
"""

import csv
import re
from importlib import resources

MAX_CROSSINGS = 8
LINKS = {"hopf_positive": "L2a1{1}", "borromean": "L6a4{0,0}"}
EXTRA = [("unknot_2kink", "X[1,3,2,2] X[3,4,4,1]")]
# 8_17 drawn with passages numbered 1..16 along the knot, crossings
# (over, under) = (12,1)- (2,7)- (8,3)- (4,11)- (16,5)+ (6,13)+ (14,9)+ (10,15)+
OVERRIDES = {"8_17": "X[1,12,2,13] X[7,2,8,3] X[3,8,4,9] X[11,4,12,5] X[5,1,6,16] X[13,7,14,6] X[9,15,10,14] X[15,11,16,10]"}


def rows(name):
    csv.field_size_limit(10**9)
    path = resources.files("database_knotinfo") / "csv_data" / name
    with path.open() as fh:
        yield from csv.DictReader(fh, delimiter="|")


def pd_string(vector):
    crossings = re.findall(r"[{\[]([\d,\s]+)[}\]]", vector)
    return " ".join("X[" + ",".join(c.split(",")).replace(" ", "") + "]" for c in crossings)


def main():
    print("# name\tpd -- prime knots up to 8 crossings (KnotInfo PD), plus a few links")
    for row in rows("knotinfo_data_complete.csv"):
        if row["name"] in ("Name", "0_1") or not row["crossing_number"].isdigit():
            continue
        if int(row["crossing_number"]) <= MAX_CROSSINGS:
            pd = OVERRIDES.get(row["name"]) or pd_string(row["pd_notation"])
            print(f"{row['name']}\t{pd}")
    wanted = {v: k for k, v in LINKS.items()}
    for row in rows("linkinfo_data_complete.csv"):
        if row["name"] in wanted:
            print(f"{wanted[row['name']]}\t{pd_string(row['pd_notation_vector'])}")
    for name, pd in EXTRA:
        print(f"{name}\t{pd}")


if __name__ == "__main__":
    main()
