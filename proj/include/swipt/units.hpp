#pragma once

#include <cmath>
#include <stdexcept>

namespace swipt {

inline double db_to_linear(double db) {
    if (!std::isfinite(db)) throw std::invalid_argument("db_to_linear: non-finite input");
    return std::pow(10.0, db / 10.0);
}

inline double linear_to_db(double lin) {
    if (!std::isfinite(lin) || lin <= 0.0)
        throw std::invalid_argument("linear_to_db: input must be finite and positive");
    return 10.0 * std::log10(lin);
}

inline double dbm_to_watts(double dbm) {
    if (!std::isfinite(dbm)) throw std::invalid_argument("dbm_to_watts: non-finite input");
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

inline double watts_to_dbm(double w) {
    if (!std::isfinite(w) || w <= 0.0)
        throw std::invalid_argument("watts_to_dbm: input must be finite and positive");
    return 10.0 * std::log10(w) + 30.0;
}

} // namespace swipt
