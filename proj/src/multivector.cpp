#include "clifford/multivector.hpp"

namespace clifford {

template class Multivector<Rational>;
template class Multivector<double>;
template Multivector<Rational> mul(const Multivector<Rational>&, const Multivector<Rational>&);
template Multivector<double> mul(const Multivector<double>&, const Multivector<double>&);
template Multivector<Rational> add(const Multivector<Rational>&, const Multivector<Rational>&);
template Multivector<double> add(const Multivector<double>&, const Multivector<double>&);

}  // namespace clifford
