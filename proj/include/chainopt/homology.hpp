#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "chainopt/boundary.hpp"
#include "chainopt/smith.hpp"

namespace chainopt {

/// H_n(X; Z) as a Betti number plus invariant factors (> 1, each dividing
/// the next).
struct HomologyGroup {
    int betti = 0;
    std::vector<Int> torsion;

    bool trivial() const { return betti == 0 && torsion.empty(); }

    bool operator==(const HomologyGroup&) const = default;

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        if (betti > 0) {
            os << "Z";
            if (betti > 1) os << "^" << betti;
            first = false;
        }
        for (const auto& d : torsion) {
            os << (first ? "" : " + ") << "Z/" << d.str();
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }
};

/// Integral homology from the Smith normal forms of the two boundary maps.
inline HomologyGroup homology(const SimplicialComplex& X, int n) {
    if (n < 0 || n > X.dim()) throw Error("homology: dimension out of range");
    int rank_dn = 0;       // rank of boundary out of dimension n
    int rank_dn1 = 0;      // rank of boundary into dimension n
    std::vector<Int> torsion;
    if (n >= 1) rank_dn = smith_normal_form(boundary_matrix(X, n)).rank;
    if (n + 1 <= X.dim()) {
        SmithDecomposition snf = smith_normal_form(boundary_matrix(X, n + 1));
        rank_dn1 = snf.rank;
        for (int i = 0; i < snf.rank; ++i)
            if (snf.diagonal[i] > 1) torsion.push_back(snf.diagonal[i]);
    }
    HomologyGroup H;
    H.betti = X.size(n) - rank_dn - rank_dn1;
    H.torsion = std::move(torsion);
    return H;
}

}  // namespace chainopt
