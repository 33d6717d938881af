#pragma once

// Amino-acid reference data and the alphabet-size arithmetic that links
// search query counts to genetic building-block counts.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lifecode::codes {

enum class RGroupProperty { NonPolar, Polar, Negative, Positive, Ring };
enum class SynthetaseClass { I, II };

inline constexpr std::size_t kPropertyCount = 5;

std::string_view to_string(RGroupProperty p);
std::string_view to_string(SynthetaseClass c);

struct AminoAcidRecord {
  std::string code3;
  std::string name;
  RGroupProperty property;
  double mol_wt;  // daltons
  SynthetaseClass synthetase_class;

  friend bool operator==(const AminoAcidRecord&, const AminoAcidRecord&) = default;
};

/// The 20 amino acids with R-group property, molecular weight and
/// aminoacyl-tRNA synthetase class. Same object on every call.
const std::vector<AminoAcidRecord>& canonical_table();

struct GroupMeans {
  RGroupProperty property;
  std::size_t class_i_count = 0;
  std::size_t class_ii_count = 0;
  double class_i_mean = 0.0;   // NaN when the class is empty
  double class_ii_mean = 0.0;
};

struct PartitionCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PartitionReport {
  std::vector<PartitionCheck> checks;  // class_split, property_split, mass_ordering, sulphur_class_i
  std::vector<GroupMeans> groups;      // one per R-group property
  std::size_t class_i_total = 0;
  std::size_t class_ii_total = 0;

  bool all_passed() const;
  const PartitionCheck& check(std::string_view name) const;
};

/// Runs the four partition checks:
///  class_split      10 records in each synthetase class
///  property_split   each R-group property split equally between classes
///  mass_ordering    per property, class I mean weight > class II mean weight
///  sulphur_class_i  Cys and Met both in class I
/// Throws ShapeError unless there are exactly 20 records.
PartitionReport validate_partition(std::span<const AminoAcidRecord> records);

struct CodeSignalCount {
  std::size_t queries;
  double exact_n;
  std::size_t rounded_alphabet;
  std::string interpretation;
};

struct StructuralBound {
  std::size_t minimum = 9;         // one amino acid per backbone orientation
  std::size_t with_trans_cis = 10;
  std::string interpretation;
};

struct AlphabetSummary {
  std::vector<CodeSignalCount> rows;
  StructuralBound structural;
};

/// One row per query count 1..q_max with the exact database size, its
/// nearest integer, and what that alphabet is in the genetic machinery.
AlphabetSummary alphabet_summary(std::size_t q_max = 3);

}  // namespace lifecode::codes
