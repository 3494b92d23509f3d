#pragma once

/* JSON form of a series: {"ring", "modulus"?, "offset", "precision",
   "coeffs"}, with coefficients as decimal strings so arbitrarily large
   values survive the round trip exactly.  Key order is fixed. */

#include <string>
#include <vector>

#include "json.hpp"

#include "qmod/series.hpp"

namespace qmod {

template <class R>
nlohmann::ordered_json series_to_json(const Series<R>& f) {
    nlohmann::ordered_json j;
    j["ring"] = R::name();
    if constexpr (std::is_same_v<R, FpRing>) j["modulus"] = f.ring().modulus();
    j["offset"] = f.offset();
    j["precision"] = f.precision();
    std::vector<std::string> coeffs;
    coeffs.reserve(f.size());
    for (long long i = 0; i < static_cast<long long>(f.size()); ++i)
        coeffs.push_back(f.ring().to_string(f.coeff(f.offset() + i)));
    j["coeffs"] = coeffs;
    return j;
}

namespace detail {

inline void check_ring_field(const nlohmann::json& j, const char* want) {
    if (!j.contains("ring") || j.at("ring").get<std::string>() != want)
        throw InvalidArgument(std::string("serialized series is not over ring ") + want);
}

template <class R>
Series<R> series_from_json_with(const nlohmann::json& j, R ring) {
    long long offset = j.at("offset").get<long long>();
    long long prec = j.at("precision").get<long long>();
    std::vector<typename R::Elem> coeffs;
    for (const auto& s : j.at("coeffs")) coeffs.push_back(ring.from_string(s.get<std::string>()));
    return Series<R>::from_coeffs(std::move(ring), offset, std::move(coeffs), prec);
}

}  // namespace detail

template <class R>
Series<R> series_from_json(const nlohmann::json& j);

template <>
inline Series<ZRing> series_from_json<ZRing>(const nlohmann::json& j) {
    detail::check_ring_field(j, ZRing::name());
    return detail::series_from_json_with(j, ZRing());
}

template <>
inline Series<QRing> series_from_json<QRing>(const nlohmann::json& j) {
    detail::check_ring_field(j, QRing::name());
    return detail::series_from_json_with(j, QRing());
}

template <>
inline Series<FpRing> series_from_json<FpRing>(const nlohmann::json& j) {
    detail::check_ring_field(j, FpRing::name());
    if (!j.contains("modulus")) throw InvalidArgument("mod-p series needs a modulus field");
    return detail::series_from_json_with(j, FpRing(j.at("modulus").get<std::uint32_t>()));
}

}  // namespace qmod
