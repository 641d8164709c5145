#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nfourier/graded.hpp"
#include "nfourier/group.hpp"

namespace nfourier {

/// Builds a group from its corpus name: "trivial", "Zn:<n>", "S3", "S4",
/// "S5", "A4", "D4", "Q8". Named tables are embedded data (Zn is the residue
/// table). Error: MalformedTable on unknown names.
GroupPtr named_group(const std::string& name);

/// The verification corpus: trivial, Z/n for n <= 8, D4, Q8, A4, S3, S4, S5.
std::vector<std::string> corpus_names();

GroupPtr klein_four();

/// FNV-1a 64 digest of (order, multiplication table), the input fingerprint
/// echoed by the CLI.
std::uint64_t table_digest(const GroupPtr& g);
std::string digest_hex(std::uint64_t d);

struct NamedGradedGroup {
  std::string name;
  ZGradedGroup delta;
};

/// The graded corpus: (Z/n, id) for n <= 6, (Z/3, inv), (Z/4, inv),
/// (S3, id), (S3, inner), (Z/2 x Z/2, swap).
std::vector<NamedGradedGroup> graded_corpus();

ZGradedGroup graded_identity(const GroupPtr& k);
ZGradedGroup graded_inversion(int n);                 // cyclic kernel, x -> -x
ZGradedGroup graded_inner(const GroupPtr& k, Element g);  // conjugation by g

}  // namespace nfourier
