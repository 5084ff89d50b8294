#pragma once

#include "mfdr/rational.hpp"

#include <map>
#include <utility>

namespace mfdr {

// Finite combination of f_{a,b} = (2 pi i (z - zbar))^a (-2 pi i zbar)^b.
struct FormalRAM {
    std::map<std::pair<int, int>, Rational> terms;

    static FormalRAM basis(int a, int b);
    bool operator==(const FormalRAM& o) const { return terms == o.terms; }
    void add(int a, int b, const Rational& c);
};

// d_m f_{a,b} = (a + m) f_{a-1,b}
FormalRAM maass_step(const FormalRAM& x, int m);
// d_n o d_{n-2} o ... o d_{-n}
FormalRAM maass_ladder(const FormalRAM& x, int n);
// D f_{a,b} = a f_{a-1,b}, applied p times
FormalRAM formal_bol(const FormalRAM& x, int p);

} // namespace mfdr
