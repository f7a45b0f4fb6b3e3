#include "liekit/polynomial.hpp"

namespace liekit {

IntPoly q_integer(std::size_t n)
{
    return IntPoly(std::vector<Integer>(n, Integer(1)));
}

} // namespace liekit
