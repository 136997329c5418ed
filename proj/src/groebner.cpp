#include "bei/groebner.hpp"

// Instantiate the engine for both coefficient fields once, here, so every
// template path is compiled and type-checked as part of the library build.

namespace bei {

template struct Ideal<Fp>;
template struct Ideal<QQ>;
template struct GroebnerBasis<Fp>;
template struct GroebnerBasis<QQ>;

template Polynomial<Fp> normal_form<Fp>(const Fp&, const Polynomial<Fp>&,
                                        const std::vector<Polynomial<Fp>>&, int*);
template Polynomial<QQ> normal_form<QQ>(const QQ&, const Polynomial<QQ>&,
                                        const std::vector<Polynomial<QQ>>&, int*);

template Polynomial<Fp> s_polynomial<Fp>(const Fp&, const Polynomial<Fp>&,
                                         const Polynomial<Fp>&);
template Polynomial<QQ> s_polynomial<QQ>(const QQ&, const Polynomial<QQ>&,
                                         const Polynomial<QQ>&);

template bool is_groebner<Fp>(const Fp&, const std::vector<Polynomial<Fp>>&);
template bool is_groebner<QQ>(const QQ&, const std::vector<Polynomial<QQ>>&);

template GroebnerBasis<Fp> buchberger<Fp>(const Fp&, const Ideal<Fp>&);
template GroebnerBasis<QQ> buchberger<QQ>(const QQ&, const Ideal<QQ>&);

template bool ideal_equal<Fp>(const Fp&, const Ideal<Fp>&, const Ideal<Fp>&);
template bool ideal_equal<QQ>(const QQ&, const Ideal<QQ>&, const Ideal<QQ>&);

template Ideal<Fp> ideal_intersection<Fp>(const Fp&, const Ideal<Fp>&,
                                          const Ideal<Fp>&);
template Ideal<QQ> ideal_intersection<QQ>(const QQ&, const Ideal<QQ>&,
                                          const Ideal<QQ>&);

template Ideal<Fp> binomial_edge_ideal<Fp>(const Fp&, const Ring&, const Graph&);
template Ideal<QQ> binomial_edge_ideal<QQ>(const QQ&, const Ring&, const Graph&);

template Ideal<Fp> p_t_ideal<Fp>(const Fp&, const Ring&, const Graph&,
                                 const std::vector<int>&);
template Ideal<QQ> p_t_ideal<QQ>(const QQ&, const Ring&, const Graph&,
                                 const std::vector<int>&);

template bool verify_herzog_decomposition<Fp>(const Fp&, const Ring&, const Graph&);
template bool verify_herzog_decomposition<QQ>(const QQ&, const Ring&, const Graph&);

template OhtaniSplit<Fp> ohtani_split<Fp>(const Fp&, const Ring&, const Graph&, int);
template OhtaniSplit<QQ> ohtani_split<QQ>(const QQ&, const Ring&, const Graph&, int);

}  // namespace bei
