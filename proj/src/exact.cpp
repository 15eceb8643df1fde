#include "twoadic/exact.hpp"

namespace twoadic {

ExactInt binomial(std::int64_t top, std::uint64_t bottom) {
    ExactInt out;
    const ExactInt t(static_cast<long>(top));
    mpz_bin_ui(out.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(bottom));
    return out;
}

}  // namespace twoadic
