"""Combinatorial test suites over input qubits: schemas, generation, coverage."""

from qcomb.covering import (
    ValueSchema,
    covers,
    enumerate_schemas,
    generate,
    suite_to_csv,
    verify_coverage,
)

# A 2-value schema fixes two input qubits and leaves the rest free.
schema = ValueSchema(positions=(1, 2), values=(0, 1))
print("row 1011 covers (-,0,1,-):", covers("1011", schema))
print("row 1111 covers (-,0,1,-):", covers("1111", schema))

# Over 4 inputs there are C(4,2) * 2^2 = 24 pairwise schemas.
schemas = list(enumerate_schemas(4, 2))
print(f"\npairwise schemas over 4 inputs: {len(schemas)}")
print("first three:", [(s.positions, s.values) for s in schemas[:3]])

# A strength-2 suite covers all of them with far fewer than 2^6 rows.
suite = generate(6, 2)
print(f"\npairwise suite over 6 inputs ({len(suite.rows)} rows):")
print(suite_to_csv(suite))
print("uncovered schemas:", verify_coverage(suite, 2))

# Seeding rows are tests that must appear in every generated suite.
seeded = generate(6, 2, seeds=["111111", "000000"])
print("with seeds, leading rows:", seeded.rows[: seeded.seeded_prefix])
assert verify_coverage(seeded, 2) == []

# Strength scales the suite: higher k covers more combinations with more rows.
for k in (2, 3, 4):
    print(f"strength {k}: {len(generate(6, k).rows)} rows")

# A suite of strength 3 is automatically also a valid strength-2 suite.
assert verify_coverage(generate(6, 3), 2) == []
print("subsumption OK")
