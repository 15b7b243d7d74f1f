#include "talex/sl2_enumerate.hpp"

#include <array>

namespace talex {

namespace {

using M2 = std::array<std::int64_t, 4>; // row-major 2x2 over F_p

M2 mul(const M2& x, const M2& y, std::int64_t p) {
    return {(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
            (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
}

M2 sl2_inverse(const M2& x, std::int64_t p) {
    auto neg = [p](std::int64_t v) { return (p - v) % p; };
    return {x[3], neg(x[1]), neg(x[2]), x[0]};
}

bool is_identity(const M2& x) { return x[0] == 1 && x[1] == 0 && x[2] == 0 && x[3] == 1; }

std::vector<M2> all_sl2(std::int64_t p) {
    std::vector<M2> out;
    for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t b = 0; b < p; ++b)
            for (std::int64_t c = 0; c < p; ++c)
                for (std::int64_t d = 0; d < p; ++d)
                    if (((a * d - b * c) % p + p) % p == 1) out.push_back({a, b, c, d});
    return out;
}

} // namespace

std::vector<Sl2Rep> enumerate_sl2_reps(const GroupPresentation& pres, long prime) {
    if (prime != 3 && prime != 5 && prime != 7)
        throw InputError("SL(2) enumeration supports p in {3, 5, 7}");
    if (pres.generators != 2)
        throw InputError("SL(2) enumeration requires a two-generator presentation");
    pres.validate();

    std::int64_t p = prime;
    std::vector<M2> group = all_sl2(p);

    std::vector<Sl2Rep> out;
    for (const M2& a : group) {
        M2 ainv = sl2_inverse(a, p);
        for (const M2& b : group) {
            M2 binv = sl2_inverse(b, p);
            bool ok = true;
            for (const Word& r : pres.relators) {
                M2 acc = {1, 0, 0, 1};
                for (const Letter& l : r.letters()) {
                    const M2& factor = l.gen == 0 ? (l.exp > 0 ? a : ainv)
                                                  : (l.exp > 0 ? b : binv);
                    acc = mul(acc, factor, p);
                }
                if (!is_identity(acc)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            Representation<Fp> rep;
            rep.dim = 2;
            rep.field = {FieldKind::prime_field, p};
            for (const M2& m : {a, b}) {
                Mat<Fp> img(2, 2);
                img(0, 0) = Fp::make(m[0], p);
                img(0, 1) = Fp::make(m[1], p);
                img(1, 0) = Fp::make(m[2], p);
                img(1, 1) = Fp::make(m[3], p);
                rep.images.push_back(img);
            }
            out.push_back(Sl2Rep{std::move(rep), false});
            out.back().irreducible = is_irreducible(out.back().rep);
        }
    }
    return out;
}

} // namespace talex
