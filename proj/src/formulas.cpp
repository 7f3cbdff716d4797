#include "casimir/formulas.hpp"

#include "casimir/error.hpp"

namespace casimir {

bool has_universal_trace(int n, int k) {
    if (k < 0) return false;
    switch (n) {
        case 2: return true;
        case 3:
        case 4: return k <= 3;
        case 5: return k <= 4;
    }
    return false;
}

Rat universal_trace(int n, int k, int dim_g, const VogelPoint& point) {
    if (!has_universal_trace(n, k))
        throw Error(ErrorCode::FormulaNotPrinted,
                    "no catalogued universal trace for n=" + std::to_string(n) +
                        ", k=" + std::to_string(k));
    Rat d(dim_g);
    if (n == 2) {
        if (k == 0) return d * (d - 1) / 2;
        return rat_pow(rat(-1, 2), static_cast<unsigned>(k)) * d;
    }
    if (n == 3) {
        switch (k) {
            case 0: return d * (d - 1) * (d - 2) / 6;
            case 1: return -d * (d - 2) / 2;
            case 2: return d * d / 4;
            case 3: return -d * (d + 6) / 8;
        }
    }
    if (n == 4) {
        switch (k) {
            case 0: return d * (d - 1) * (d - 2) * (d - 3) / 24;
            case 1: return -d * (d - 2) * (d - 3) / 4;
            case 2: return d * (d - 3) * (d + 4) / 8;
            case 3: return -d * (d - 3) * (d + 20) / 16;
        }
    }
    if (n == 5) {
        switch (k) {
            case 0: return d * (d - 1) * (d - 2) * (d - 3) * (d - 4) / 120;
            case 1: return -d * (d - 2) * (d - 3) * (d - 4) / 12;
            case 2: return d * (d - 3) * (d - 4) * (d + 10) / 24;
            case 3: return -d * (d - 3) * (d * d + 36 * d - 124) / 48;
            case 4: {
                Rat abg = point.alpha * point.beta * point.gamma;
                return d * (d - 3) *
                       (d * d + 114 * d - 208 +
                        Rat(36) * (d - 10) * (d - 9) * abg) /
                       96;
            }
        }
    }
    throw Error(ErrorCode::FormulaNotPrinted, "universal_trace");
}

Rat dim_x(int m, int dim_g) {
    Rat d(dim_g);
    switch (m) {
        case 0: return Rat(1);
        case 1: return d;
        case 2: return d * (d - 3) / 2;
        case 3: return d * (d - 1) * (d - 8) / 6;
        case 4: return d * (d - 1) * (d - 3) * (d - 14) / 24;
        case 5:
            return d * (d - 3) * (d - 6) * (d * d - 21 * d + 8) / 120;
    }
    throw Error(ErrorCode::SlotOutOfRange, "dim_x: m must be 0..5");
}

Rat dim_m3(M3Family family, std::optional<int> N) {
    switch (family) {
        case M3Family::SL: {
            if (!N)
                throw Error(ErrorCode::MissingParameter, "dim_m3: N for SL");
            Rat n(*N);
            return (n * n - 1) * (n * n - 2) * (n * n - 9) / 6;
        }
        case M3Family::SO: {
            if (!N)
                throw Error(ErrorCode::MissingParameter, "dim_m3: N for SO");
            Rat n(*N);
            return n * (n * n - 1) * (n - 3) * (n * n - 16) / 72;
        }
        case M3Family::EXCEPTIONAL: return Rat(0);
    }
    throw Error(ErrorCode::MissingParameter, "dim_m3");
}

std::optional<Rat> m3_dim_for(const AlgebraId& id) {
    switch (id.family) {
        case Family::SL: return dim_m3(M3Family::SL, id.parameter);
        case Family::SO: return dim_m3(M3Family::SO, id.parameter);
        case Family::SP: return std::nullopt;
        default: return dim_m3(M3Family::EXCEPTIONAL);
    }
}

}  // namespace casimir
