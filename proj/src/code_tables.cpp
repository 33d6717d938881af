#include "lifecode/code_tables.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "lifecode/errors.hpp"
#include "lifecode/search_core.hpp"

namespace lifecode::codes {

std::string_view to_string(RGroupProperty p) {
  switch (p) {
    case RGroupProperty::NonPolar: return "NonPolar";
    case RGroupProperty::Polar: return "Polar";
    case RGroupProperty::Negative: return "Negative";
    case RGroupProperty::Positive: return "Positive";
    case RGroupProperty::Ring: return "Ring";
  }
  return "?";
}

std::string_view to_string(SynthetaseClass c) { return c == SynthetaseClass::I ? "I" : "II"; }

const std::vector<AminoAcidRecord>& canonical_table() {
  using P = RGroupProperty;
  using C = SynthetaseClass;
  static const std::vector<AminoAcidRecord> table{
      {"Gly", "Glycine", P::NonPolar, 75, C::II},
      {"Ala", "Alanine", P::NonPolar, 89, C::II},
      {"Pro", "Proline", P::NonPolar, 115, C::II},
      {"Val", "Valine", P::NonPolar, 117, C::I},
      {"Leu", "Leucine", P::NonPolar, 131, C::I},
      {"Ile", "Isoleucine", P::NonPolar, 131, C::I},
      {"Ser", "Serine", P::Polar, 105, C::II},
      {"Thr", "Threonine", P::Polar, 119, C::II},
      {"Asn", "Asparagine", P::Polar, 132, C::II},
      {"Cys", "Cysteine", P::Polar, 121, C::I},
      {"Met", "Methionine", P::Polar, 149, C::I},
      {"Gln", "Glutamine", P::Polar, 146, C::I},
      {"Asp", "Aspartate", P::Negative, 133, C::II},
      {"Glu", "Glutamate", P::Negative, 147, C::I},
      {"Lys", "Lysine", P::Positive, 146, C::II},
      {"Arg", "Arginine", P::Positive, 174, C::I},
      {"His", "Histidine", P::Ring, 155, C::II},
      {"Phe", "Phenylalanine", P::Ring, 165, C::II},
      {"Tyr", "Tyrosine", P::Ring, 181, C::I},
      {"Trp", "Tryptophan", P::Ring, 204, C::I},
  };
  return table;
}

bool PartitionReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const PartitionCheck& PartitionReport::check(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw InputError("no partition check named " + std::string(name));
}

PartitionReport validate_partition(std::span<const AminoAcidRecord> records) {
  if (records.size() != 20) {
    throw ShapeError("partition validation needs 20 records, got " + std::to_string(records.size()));
  }

  PartitionReport report;
  std::array<double, kPropertyCount> sum_i{}, sum_ii{};
  report.groups.resize(kPropertyCount);
  for (std::size_t k = 0; k < kPropertyCount; ++k) report.groups[k].property = static_cast<RGroupProperty>(k);

  for (const auto& r : records) {
    const auto k = static_cast<std::size_t>(r.property);
    if (r.synthetase_class == SynthetaseClass::I) {
      ++report.class_i_total;
      ++report.groups[k].class_i_count;
      sum_i[k] += r.mol_wt;
    } else {
      ++report.class_ii_total;
      ++report.groups[k].class_ii_count;
      sum_ii[k] += r.mol_wt;
    }
  }

  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  bool equal_split = true;
  bool heavier_class_i = true;
  std::ostringstream split_detail, mass_detail;
  for (std::size_t k = 0; k < kPropertyCount; ++k) {
    GroupMeans& g = report.groups[k];
    g.class_i_mean = g.class_i_count ? sum_i[k] / double(g.class_i_count) : nan;
    g.class_ii_mean = g.class_ii_count ? sum_ii[k] / double(g.class_ii_count) : nan;
    equal_split = equal_split && g.class_i_count == g.class_ii_count;
    // NaN comparisons fail, so an empty class fails the ordering.
    heavier_class_i = heavier_class_i && g.class_i_mean > g.class_ii_mean;
    split_detail << (k ? " " : "") << to_string(g.property) << "=" << g.class_i_count << "/" << g.class_ii_count;
    mass_detail << (k ? " " : "") << to_string(g.property) << "=" << g.class_i_mean << ">" << g.class_ii_mean;
  }

  bool cys_i = false, met_i = false;
  for (const auto& r : records) {
    if (r.code3 == "Cys") cys_i = r.synthetase_class == SynthetaseClass::I;
    if (r.code3 == "Met") met_i = r.synthetase_class == SynthetaseClass::I;
  }

  report.checks = {
      {"class_split", report.class_i_total == 10 && report.class_ii_total == 10,
       "I=" + std::to_string(report.class_i_total) + " II=" + std::to_string(report.class_ii_total)},
      {"property_split", equal_split, split_detail.str()},
      {"mass_ordering", heavier_class_i, mass_detail.str()},
      {"sulphur_class_i", cys_i && met_i,
       std::string("Cys=") + (cys_i ? "I" : "II") + " Met=" + (met_i ? "I" : "II")},
  };
  return report;
}

AlphabetSummary alphabet_summary(std::size_t q_max) {
  if (q_max < 1) throw InputError("q_max must be at least 1");
  AlphabetSummary out;
  for (std::size_t q = 1; q <= q_max; ++q) {
    const double n = search::database_size_for_queries(q);
    std::string meaning;
    switch (q) {
      case 1: meaning = "nucleotide bases"; break;
      case 2: meaning = "doublet code / one amino-acid class"; break;
      case 3: meaning = "triplet code amino acids; 21 with STOP"; break;
      default: break;
    }
    out.rows.push_back({q, n, static_cast<std::size_t>(std::llround(n)), std::move(meaning)});
  }
  out.structural.interpretation =
      "backbone orientations per peptide unit: 9, or 10 counting the trans-cis option";
  return out;
}

}  // namespace lifecode::codes
