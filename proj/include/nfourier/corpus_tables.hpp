#pragma once

namespace nfourier::tables {

// Cayley tables of the named corpus groups, embedded as data. Symmetric and
// alternating groups use permutations in lexicographic one-line order with
// composition (p*q)(x) = p(q(x)); D4 is r^a s^b with index a + 4b; Q8 uses
// the order 1, -1, i, -i, j, -j, k, -k.

extern const int kS3Order;
extern const unsigned char kS3Table[];
extern const char* const kS3Labels[];

extern const int kS4Order;
extern const unsigned char kS4Table[];
extern const char* const kS4Labels[];

extern const int kS5Order;
extern const unsigned char kS5Table[];
extern const char* const kS5Labels[];

extern const int kA4Order;
extern const unsigned char kA4Table[];
extern const char* const kA4Labels[];

extern const int kD4Order;
extern const unsigned char kD4Table[];
extern const char* const kD4Labels[];

extern const int kQ8Order;
extern const unsigned char kQ8Table[];
extern const char* const kQ8Labels[];

}  // namespace nfourier::tables
