#include "ordring/skew_rings.hpp"

#include "ordring/braid.hpp"
#include "ordring/errors.hpp"

namespace ordring {

MagnusSkewRing magnus_skew_ring_b3(MagnusCtx ctx) {
    if (ctx.nvars != 2) raise(errc::invalid_config, "the braid twist lives on F_2");
    // F_2 = [B_3, B_3] with a = s2 s1^-1 and b = s1 a s1^-1; conjugation by s1
    // sends a -> b and b -> a^-1 b. Checked against the braid oracle before use.
    Word a{2, -1}, b{1, 2, -1, -1}, s1{1};
    auto conj = [&](const Word& w) { return word_mul(word_mul(s1, w), word_inverse(s1)); };
    if (!b3_oracle_equal(conj(a), b) ||
        !b3_oracle_equal(conj(b), word_mul(word_inverse(a), b)))
        raise(errc::certification_failed, "braid action on F_2 failed oracle verification");

    MagnusSkewRing ring;
    ring.ctx = ctx;
    MagnusSeries one = MagnusSeries::constant(ctx, 1);
    ring.phi_images = {magnus_image({2}, ctx) - one, magnus_image({-1, 2}, ctx) - one};
    ring.phi_inv_images = {magnus_image({1, -2}, ctx) - one, magnus_image({1}, ctx) - one};
    return ring;
}

}  // namespace ordring
