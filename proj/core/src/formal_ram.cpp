#include "mfdr/formal_ram.hpp"

#include "mfdr/errors.hpp"

namespace mfdr {

FormalRAM FormalRAM::basis(int a, int b)
{
    if (b < 0)
        throw DomainError("f_{a,b} needs b >= 0");
    FormalRAM x;
    x.terms[{a, b}] = 1;
    return x;
}

void FormalRAM::add(int a, int b, const Rational& c)
{
    if (b < 0)
        throw DomainError("f_{a,b} needs b >= 0");
    auto& slot = terms[{a, b}];
    slot += c;
    if (slot == 0)
        terms.erase({a, b});
}

FormalRAM maass_step(const FormalRAM& x, int m)
{
    FormalRAM out;
    for (const auto& [key, c] : x.terms) {
        auto [a, b] = key;
        if (a + m != 0)
            out.add(a - 1, b, c * (a + m));
    }
    return out;
}

FormalRAM maass_ladder(const FormalRAM& x, int n)
{
    if (n < 0)
        throw DomainError("maass_ladder: n must be >= 0");
    FormalRAM y = x;
    for (int m = -n; m <= n; m += 2)
        y = maass_step(y, m);
    return y;
}

FormalRAM formal_bol(const FormalRAM& x, int p)
{
    FormalRAM y = x;
    for (int i = 0; i < p; ++i)
        y = maass_step(y, 0);
    return y;
}

} // namespace mfdr
