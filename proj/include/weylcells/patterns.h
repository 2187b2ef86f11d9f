#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylcells/weyl.h"

namespace wc {
namespace patterns {

// Relabels a signed sequence to use absolute values 1..k, preserving signs
// and the relative order of absolute values. Throws on repeated absolute
// values or zero entries.
SignedSeq fl(const SignedSeq& seq);

// True when the entries are their own flattening (absolute values exactly 1..k).
bool is_signed_pattern(const SignedSeq& p);

struct PatternWitness {
  SignedSeq pattern;
  std::vector<int> positions;  // 0-based positions into the host sequence
};

// Does some length-|p| subsequence of seq flatten to p? Returns the first
// witness in lexicographic position order.
std::optional<std::vector<int>> find_signed_pattern(const SignedSeq& seq, const SignedSeq& p);
bool contains_signed_pattern(const SignedSeq& seq, const SignedSeq& p);

enum class TypeAPattern { p3412, p4231 };

std::optional<std::vector<int>> find_typeA_pattern(const SignedSeq& perm, TypeAPattern p);
bool contains_typeA_pattern(const SignedSeq& perm, TypeAPattern p);

// The forbidden signed patterns for elements of w0*C, per classical family.
// The D list depends on the parity of the ambient rank.
std::vector<SignedSeq> restricted_forbidden_list(char family, int rank);

// Signed sequence in bar notation, e.g. (-2,-1) -> "2̄1̄".
std::string bar_notation(const SignedSeq& p);

}  // namespace patterns
}  // namespace wc
