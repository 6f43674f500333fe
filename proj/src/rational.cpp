#include "leafpower/rational.hpp"

namespace leafpower {

Rat rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // Decimal numeral: digits after the dot scale the denominator.
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (frac_len == 0 || dot == 0) throw std::invalid_argument("malformed decimal: " + s);
        mpz_class num;
        if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
            throw std::invalid_argument("malformed decimal: " + s);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        Rat q(num, den);
        q.canonicalize();
        return q;
    }
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

nlohmann::json rat_to_json(const Rat& q) {
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    bool small = num.fits_slong_p() && den.fits_slong_p();
    if (small && den == 1) return nlohmann::json(num.get_si());
    if (small) return nlohmann::json::array({num.get_si(), den.get_si()});
    return nlohmann::json::array({num.get_str(), den.get_str()});
}

Rat rat_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("rational JSON must be an integer or a [num, den] pair");
    auto part = [](const nlohmann::json& p) -> mpz_class {
        if (p.is_number_integer()) return mpz_class(static_cast<long>(p.get<std::int64_t>()));
        if (p.is_string()) {
            mpz_class z;
            if (mpz_set_str(z.get_mpz_t(), p.get<std::string>().c_str(), 10) != 0)
                throw std::invalid_argument("malformed integer literal in rational JSON");
            return z;
        }
        throw std::invalid_argument("rational JSON components must be integers or strings");
    };
    mpz_class num = part(j[0]), den = part(j[1]);
    if (den == 0) throw std::invalid_argument("rational JSON with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace leafpower
