#pragma once

// template bodies for table.hpp

namespace cutcount {

struct JoinCorrection {
    uint64_t acc = 0;
    int w = 0;
};

template <class Corr, class Fix>
void diagonal_join(const ParityTable& a, const ParityTable& b, ParityTable& out, const AccLimits& lim, Corr corr, Fix fix) {
    auto ga = a.col_groups();
    auto gb = b.col_groups();
    auto& ea = a.entries();
    auto& eb = b.entries();
    const auto& alg = out.alg();
    size_t j = 0;
    for (auto [abeg, aend] : ga) {
        uint64_t col = ea[abeg].col;
        while (j < gb.size() && eb[gb[j].first].col < col) ++j;
        if (j == gb.size()) break;
        if (eb[gb[j].first].col != col) continue;
        JoinCorrection c = corr(col);
        for (uint32_t x = abeg; x < aend; ++x)
            for (uint32_t y = gb[j].first; y < gb[j].second; ++y) {
                uint64_t acc = ea[x].acc + eb[y].acc - c.acc;
                if (!fix(acc) || !lim.ok(acc)) continue;
                alg.add_product(out.cell(col, acc), a.value(ea[x]), b.value(eb[y]), c.w);
            }
    }
}

}  // namespace cutcount
