#include "modcorr/refdata.hpp"

#include "modcorr/errors.hpp"

namespace modcorr {

namespace {

struct RefTerm {
    long i, j;
    const char* c;
};

struct RefRow {
    long level, n;
    std::vector<RefTerm> terms;
};

/* Rows are symmetric; both (i,j) and (j,i) are spelled out so the data
   below is the complete term list. */
const std::vector<RefRow>& rows() {
    static const std::vector<RefRow> data = {
        {3, 2,
         {{3, 0, "1"},
          {2, 2, "-1"},
          {2, 1, "-24"},
          {1, 2, "-24"},
          {1, 1, "-729"},
          {0, 3, "1"}}},
        {5, 2,
         {{3, 0, "1"},
          {2, 2, "-1"},
          {2, 1, "-12"},
          {1, 2, "-12"},
          {1, 1, "-125"},
          {0, 3, "1"}}},
        {2, 3,
         {{4, 0, "1"},
          {3, 3, "-1"},
          {3, 2, "-72"},
          {3, 1, "-900"},
          {2, 3, "-72"},
          {2, 2, "28422"},
          {2, 1, "-294912"},
          {1, 3, "-900"},
          {1, 2, "-294912"},
          {1, 1, "-16777216"},
          {0, 4, "1"}}},
        {4, 3,
         {{4, 0, "1"},
          {3, 3, "-1"},
          {3, 2, "-24"},
          {3, 1, "-132"},
          {2, 3, "-24"},
          {2, 2, "-762"},
          {2, 1, "-6144"},
          {1, 3, "-132"},
          {1, 2, "-6144"},
          {1, 1, "-65536"},
          {0, 4, "1"}}},
        {5, 3,
         {{4, 0, "1"},
          {3, 3, "-1"},
          {3, 2, "-18"},
          {3, 1, "-81"},
          {2, 3, "-18"},
          {2, 2, "-414"},
          {2, 1, "-2250"},
          {1, 3, "-81"},
          {1, 2, "-2250"},
          {1, 1, "-15625"},
          {0, 4, "1"}}},
        {2, 5,
         {{6, 0, "1"},
          {5, 5, "-1"},
          {5, 4, "-120"},
          {5, 3, "-4380"},
          {5, 2, "-49120"},
          {5, 1, "-90630"},
          {4, 5, "-120"},
          {4, 4, "905720"},
          {4, 3, "-97804320"},
          {4, 2, "746465295"},
          {4, 1, "-201195520"},
          {3, 5, "-4380"},
          {3, 4, "-97804320"},
          {3, 3, "-33983400980"},
          {3, 2, "-400606494720"},
          {3, 1, "-73484206080"},
          {2, 5, "-49120"},
          {2, 4, "746465295"},
          {2, 3, "-400606494720"},
          {2, 2, "15195460075520"},
          {2, 1, "-8246337208320"},
          {1, 5, "-90630"},
          {1, 4, "-201195520"},
          {1, 3, "-73484206080"},
          {1, 2, "-8246337208320"},
          {1, 1, "-281474976710656"},
          {0, 6, "1"}}},
    };
    return data;
}

}  // namespace

std::vector<std::pair<long, long>> reference_rows() {
    std::vector<std::pair<long, long>> out;
    for (const auto& r : rows()) out.emplace_back(r.level, r.n);
    return out;
}

ModPoly reference_psi(long level, long n) {
    for (const auto& r : rows()) {
        if (r.level != level || r.n != n) continue;
        ModPoly p;
        p.level = level;
        p.n = n;
        p.kind = PolyKind::psi;
        for (const auto& t : r.terms) p.terms[{t.i, t.j}] = Int(t.c);
        return p;
    }
    throw DomainError("no reference polynomial for this (level, n)");
}

}  // namespace modcorr
