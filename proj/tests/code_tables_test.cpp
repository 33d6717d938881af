#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "lifecode/code_tables.hpp"
#include "lifecode/errors.hpp"

using namespace lifecode;
using namespace lifecode::codes;

namespace {

std::vector<AminoAcidRecord> table_copy() { return canonical_table(); }

AminoAcidRecord& find(std::vector<AminoAcidRecord>& t, const std::string& code3) {
  for (auto& r : t)
    if (r.code3 == code3) return r;
  throw std::runtime_error("missing " + code3);
}

}  // namespace

TEST(CanonicalTable, Rows) {
  auto t = table_copy();
  ASSERT_EQ(t.size(), 20u);
  const auto& gly = find(t, "Gly");
  EXPECT_EQ(gly.property, RGroupProperty::NonPolar);
  EXPECT_EQ(gly.mol_wt, 75.0);
  EXPECT_EQ(gly.synthetase_class, SynthetaseClass::II);
  const auto& trp = find(t, "Trp");
  EXPECT_EQ(trp.property, RGroupProperty::Ring);
  EXPECT_EQ(trp.mol_wt, 204.0);
  EXPECT_EQ(trp.synthetase_class, SynthetaseClass::I);
  EXPECT_EQ(find(t, "Asp").synthetase_class, SynthetaseClass::II);
  EXPECT_EQ(find(t, "Asp").mol_wt, 133.0);
  EXPECT_EQ(find(t, "Glu").synthetase_class, SynthetaseClass::I);
  EXPECT_EQ(find(t, "Glu").mol_wt, 147.0);
}

TEST(Partition, CanonicalTablePasses) {
  const auto report = validate_partition(canonical_table());
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.class_i_total, 10u);
  EXPECT_EQ(report.class_ii_total, 10u);
  for (const auto& g : report.groups) {
    if (g.property != RGroupProperty::Ring) continue;
    EXPECT_NEAR(g.class_i_mean, (181.0 + 204.0) / 2.0, 1e-12);
    EXPECT_NEAR(g.class_ii_mean, (155.0 + 165.0) / 2.0, 1e-12);
  }
}

TEST(Partition, GlycineMutantBreaksSplits) {
  auto t = table_copy();
  find(t, "Gly").synthetase_class = SynthetaseClass::I;
  const auto r = validate_partition(t);
  EXPECT_FALSE(r.check("class_split").passed);
  EXPECT_FALSE(r.check("property_split").passed);
}

TEST(Partition, SwappedGlutamineBreaksOnlyPropertySplit) {
  auto t = table_copy();
  find(t, "Gly").synthetase_class = SynthetaseClass::I;
  find(t, "Gln").synthetase_class = SynthetaseClass::II;
  const auto r = validate_partition(t);
  EXPECT_TRUE(r.check("class_split").passed);
  EXPECT_FALSE(r.check("property_split").passed);
}

TEST(Partition, AcidSwapBreaksMassOrdering) {
  auto t = table_copy();
  find(t, "Asp").synthetase_class = SynthetaseClass::I;
  find(t, "Glu").synthetase_class = SynthetaseClass::II;
  const auto r = validate_partition(t);
  EXPECT_TRUE(r.check("class_split").passed);
  EXPECT_TRUE(r.check("property_split").passed);
  EXPECT_FALSE(r.check("mass_ordering").passed);
  EXPECT_TRUE(r.check("sulphur_class_i").passed);
}

TEST(Partition, CysteineMutantBreaksSulphurCheck) {
  auto t = table_copy();
  find(t, "Cys").synthetase_class = SynthetaseClass::II;
  find(t, "Ser").synthetase_class = SynthetaseClass::I;
  const auto r = validate_partition(t);
  EXPECT_FALSE(r.check("sulphur_class_i").passed);
  EXPECT_TRUE(r.check("class_split").passed);
}

TEST(Partition, WrongRecordCount) {
  auto t = table_copy();
  t.pop_back();
  EXPECT_THROW(validate_partition(t), ShapeError);
}

TEST(AlphabetSummary, Rows) {
  const auto s = alphabet_summary(3);
  ASSERT_EQ(s.rows.size(), 3u);
  EXPECT_EQ(s.rows[0].rounded_alphabet, 4u);
  EXPECT_NEAR(s.rows[1].exact_n, 10.47, 0.01);
  EXPECT_NEAR(s.rows[2].exact_n, 20.20, 0.01);
  EXPECT_EQ(s.rows[2].rounded_alphabet, 20u);
  EXPECT_EQ(s.structural.minimum, 9u);
  EXPECT_EQ(s.structural.with_trans_cis, 10u);
  EXPECT_NEAR(alphabet_summary(5).rows[3].exact_n, 1.0 / std::pow(std::sin(3.14159265358979323846 / 18.0), 2), 1e-9);
}
