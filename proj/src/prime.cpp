#include "padyn/prime.hpp"

#include "padyn/errors.hpp"

namespace padyn {

Prime::Prime(unsigned long p) : p_(p), z_(static_cast<long>(p)) {
    if (p < 2 || mpz_probab_prime_p(z_.get_mpz_t(), 40) == 0)
        throw InvalidParamsError("p = " + std::to_string(p) + " is not prime");
}

}  // namespace padyn
