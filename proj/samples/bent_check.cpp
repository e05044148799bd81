// Which f_alpha on GF(16^2) are bent?

#include <iostream>

#include <permwalsh/field.hpp>
#include <permwalsh/io.hpp>
#include <permwalsh/perm_map.hpp>
#include <permwalsh/walsh.hpp>

int main() {
    using namespace permwalsh;
    const FieldCtx ctx(4);
    const SigmaTable sigma = sigma_inverse_table(ctx);
    for (std::uint32_t a = 1; a < ctx.q(); ++a) {
        const Elem alpha{a};
        const Spectrum s = walsh_full(ctx, f_alpha_table(ctx, sigma, alpha));
        std::cout << to_string(alpha) << (ctx.is_cube(alpha) ? "  cube     " : "  non-cube ")
                  << (is_bent(s) ? "bent" : "not bent") << "\n";
    }
}
