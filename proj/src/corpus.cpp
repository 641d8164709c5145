#include "nfourier/corpus.hpp"

#include <sstream>

#include "nfourier/corpus_tables.hpp"
#include "nfourier/error.hpp"

namespace nfourier {

namespace {

GroupPtr from_embedded(int order, const unsigned char* data, const char* const* labels) {
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  std::vector<std::string> names(order);
  for (int i = 0; i < order; ++i) {
    names[i] = labels[i];
    for (int j = 0; j < order; ++j) table[i][j] = data[i * order + j];
  }
  return group_from_table(table, std::move(names));
}

}  // namespace

GroupPtr named_group(const std::string& name) {
  using namespace tables;
  if (name == "trivial") return group_from_table({{0}}, {"e"});
  if (name.rfind("Zn:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(name.substr(3));
    } catch (...) {
      fail("MalformedTable", "bad cyclic order in named group: " + name);
    }
    if (n < 1) fail("MalformedTable", "cyclic order must be >= 1");
    return cyclic_group(n);
  }
  if (name == "S3") return from_embedded(kS3Order, kS3Table, kS3Labels);
  if (name == "S4") return from_embedded(kS4Order, kS4Table, kS4Labels);
  if (name == "S5") return from_embedded(kS5Order, kS5Table, kS5Labels);
  if (name == "A4") return from_embedded(kA4Order, kA4Table, kA4Labels);
  if (name == "D4") return from_embedded(kD4Order, kD4Table, kD4Labels);
  if (name == "Q8") return from_embedded(kQ8Order, kQ8Table, kQ8Labels);
  fail("MalformedTable", "unknown named group: " + name);
}

std::vector<std::string> corpus_names() {
  std::vector<std::string> names{"trivial"};
  for (int n = 2; n <= 8; ++n) names.push_back("Zn:" + std::to_string(n));
  names.insert(names.end(), {"D4", "Q8", "A4", "S3", "S4", "S5"});
  return names;
}

GroupPtr klein_four() {
  return group_from_table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}},
                          {"e", "a", "b", "ab"});
}

std::uint64_t table_digest(const GroupPtr& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t byte) {
    h ^= byte & 0xff;
    h *= 1099511628211ULL;
  };
  const int n = g->order();
  for (int s = 0; s < 4; ++s) mix(static_cast<std::uint64_t>(n) >> (8 * s));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = g->mul(i, j);
      mix(static_cast<std::uint64_t>(v));
      mix(static_cast<std::uint64_t>(v) >> 8);
    }
  return h;
}

std::string digest_hex(std::uint64_t d) {
  std::ostringstream os;
  os << std::hex;
  for (int s = 60; s >= 0; s -= 4) os << ((d >> s) & 0xf);
  return os.str();
}

ZGradedGroup graded_identity(const GroupPtr& k) {
  std::vector<Element> images(k->order());
  for (int i = 0; i < k->order(); ++i) images[i] = i;
  return ZGradedGroup(k, GroupMap(k, k, std::move(images)));
}

ZGradedGroup graded_inversion(int n) {
  GroupPtr k = cyclic_group(n);
  std::vector<Element> images(n);
  for (int i = 0; i < n; ++i) images[i] = (n - i) % n;
  return ZGradedGroup(k, GroupMap(k, k, std::move(images)));
}

ZGradedGroup graded_inner(const GroupPtr& k, Element g) {
  std::vector<Element> images(k->order());
  for (int i = 0; i < k->order(); ++i) images[i] = k->conj(g, i);
  return ZGradedGroup(k, GroupMap(k, k, std::move(images)));
}

std::vector<NamedGradedGroup> graded_corpus() {
  std::vector<NamedGradedGroup> out;
  for (int n = 1; n <= 6; ++n)
    out.push_back({"(Z" + std::to_string(n) + ", id)", graded_identity(cyclic_group(n))});
  out.push_back({"(Z3, inv)", graded_inversion(3)});
  out.push_back({"(Z4, inv)", graded_inversion(4)});
  GroupPtr s3 = named_group("S3");
  out.push_back({"(S3, id)", graded_identity(s3)});
  // conjugation by a transposition: an inner automorphism of order 2
  out.push_back({"(S3, inner)", graded_inner(s3, s3->class_rep(1))});
  GroupPtr v4 = klein_four();
  std::vector<Element> swap_map{0, 2, 1, 3};
  out.push_back({"(V4, swap)", ZGradedGroup(v4, GroupMap(v4, v4, swap_map))});
  return out;
}

}  // namespace nfourier
