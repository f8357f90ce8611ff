#include "ringlib/parser.hpp"

#include <cctype>

#include "ringlib/constructions.hpp"

namespace rings {

namespace {

class Parser {
public:
    explicit Parser(std::string text) : text_(std::move(text)) {}

    RingPtr parse_ring() {
        RingPtr r = product();
        if (pos_ != text_.size()) fail("end of input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError(pos_, expected,
                         "parse error at position " + std::to_string(pos_) + ": expected " +
                             expected);
    }

    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    bool literal(const std::string& s) {
        if (text_.compare(pos_, s.size(), s) != 0) return false;
        pos_ += s.size();
        return true;
    }
    void expect(const std::string& s) {
        if (!literal(s)) fail("'" + s + "'");
    }

    std::int64_t nat() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("number");
        std::int64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            v = v * 10 + (text_[pos_++] - '0');
        return v;
    }

    RingPtr product() {
        std::vector<RingPtr> factors{postfix()};
        while (true) {
            std::size_t mark = pos_;
            std::size_t spaces = 0;
            while (peek() == ' ') {
                ++pos_;
                ++spaces;
            }
            if (spaces > 0 && peek() == 'x' && peek(1) == ' ') {
                ++pos_;
                while (peek() == ' ') ++pos_;
                factors.push_back(postfix());
            } else {
                pos_ = mark;
                break;
            }
        }
        if (factors.size() == 1) return factors[0];
        return std::make_shared<DirectProductRing>(std::move(factors));
    }

    RingPtr postfix() {
        RingPtr r = primary();
        while (peek() == '[') {
            ++pos_;
            if (peek() == 'C' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
                r = std::make_shared<GroupRing>(r, group());
                expect("]");
            } else {
                if (!std::islower(static_cast<unsigned char>(peek()))) fail("variable");
                std::string var(1, text_[pos_++]);
                expect("]");
                auto base = std::dynamic_pointer_cast<const ModularIntRing>(r);
                if (!base) fail("a Z/n base for a polynomial ring");
                if (!literal("/(")) {
                    // bare Z/n[v]: the sample-only polynomial ring
                    r = std::make_shared<PolynomialRing>(base, var);
                    continue;
                }
                Coords modulus = poly(var, base->modulus());
                expect(")");
                if (modulus.size() < 2 || modulus.back() != 1)
                    fail("a monic modulus polynomial of degree >= 1");
                r = std::make_shared<PolyQuotientRing>(base, std::move(modulus), var);
            }
        }
        return r;
    }

    GroupDescriptor group() {
        std::vector<std::int64_t> orders;
        expect("C");
        orders.push_back(nat());
        while (peek() == 'x' && peek(1) == 'C') {
            pos_ += 2;
            orders.push_back(nat());
        }
        return GroupDescriptor(std::move(orders));
    }

    RingPtr primary() {
        if (literal("Z/")) {
            std::int64_t n = nat();
            if (n < 2) fail("a modulus >= 2");
            return std::make_shared<ModularIntRing>(n);
        }
        if (literal("GR(")) {
            std::int64_t p = nat();
            expect(",");
            std::int64_t k = nat();
            expect(",");
            Coords q = poly("x", 0);
            expect(")");
            return galois_ring(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(k),
                               std::move(q))
                .ring;
        }
        if (peek() == 'M' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            ++pos_;
            std::int64_t n = nat();
            expect("(");
            RingPtr base = product();
            expect(")");
            return std::make_shared<MatrixRing>(std::move(base),
                                                static_cast<std::size_t>(n));
        }
        fail("a ring expression (Z/n, Mn(...), GR(p,k,q), or a quotient/group form)");
    }

    // Polynomial in one fixed variable; coefficients as written (reduced by
    // the caller).  modulus 0 means leave coefficients unreduced.
    Coords poly(const std::string& var, std::int64_t modulus) {
        Coords coeffs;
        bool first = true;
        while (true) {
            std::int64_t sign = 1;
            if (literal("+")) {
            } else if (literal("-")) {
                sign = -1;
            } else if (!first) {
                break;
            }
            first = false;
            std::int64_t coeff = 1;
            bool have_coeff = false;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff = nat();
                have_coeff = true;
                literal("*");
            }
            std::size_t degree = 0;
            if (literal(var)) {
                degree = 1;
                if (literal("^")) degree = static_cast<std::size_t>(nat());
            } else if (!have_coeff) {
                fail("a term of the form c, c*" + var + ", or " + var + "^e");
            }
            if (coeffs.size() <= degree) coeffs.resize(degree + 1, 0);
            coeffs[degree] += sign * coeff;
        }
        if (coeffs.empty()) fail("a polynomial");
        if (modulus > 0)
            for (auto& c : coeffs) c = ((c % modulus) + modulus) % modulus;
        while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
        return coeffs;
    }

    std::string text_;
    std::size_t pos_ = 0;
};

// Splits on a separator at bracket depth zero.
std::vector<std::string> split_outside_brackets(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '[' || ch == '(') ++depth;
        if (ch == ']' || ch == ')') --depth;
        if (ch == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(' ');
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(' ');
    return s.substr(b, e - b + 1);
}

}  // namespace

RingExpr parse_ring_expr(const std::string& text) {
    Parser p(strip(text));
    return {text, p.parse_ring()};
}

Element parse_element(const RingPtr& ring, const std::string& text) {
    std::string s = strip(text);
    if (s.empty()) throw ParseError(0, "an element", "empty element expression");

    if (s.front() == '[') {
        // raw canonical coords, flattened row-major; nested brackets allowed
        Coords coords;
        std::string digits;
        for (char ch : s) {
            if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
                digits += ch;
            } else if (!digits.empty()) {
                coords.push_back(std::stoll(digits));
                digits.clear();
            }
        }
        if (!digits.empty()) coords.push_back(std::stoll(digits));
        if (coords.size() != ring->coord_count())
            throw ParseError(0, std::to_string(ring->coord_count()) + " coordinates",
                             "expected " + std::to_string(ring->coord_count()) +
                                 " coordinates for " + ring->name() + ", got " +
                                 std::to_string(coords.size()));
        // canonicalize through the integer embedding of each coordinate slot
        Element out = ring->zero();
        for (std::size_t i = 0; i < coords.size(); ++i) {
            Element unit_slot = ring->zero();
            unit_slot.coords[i] = 1;
            // scale the slot indicator; slots are base-ring coordinates, so
            // repeated addition reduces canonically
            out = ring->add(out, ring->smul(coords[i], unit_slot));
        }
        return out;
    }

    // symbolic form: integer combination of powers of the ring's symbol
    std::string sym;
    Element gen = ring->zero();
    if (auto pq = std::dynamic_pointer_cast<const PolyQuotientRing>(ring)) {
        sym = pq->var();
        if (pq->degree() > 1) {
            gen = ring->zero();
            gen.coords[1] = 1;
        }
    } else if (auto pr = std::dynamic_pointer_cast<const PolynomialRing>(ring)) {
        sym = pr->var();
        gen = {ring.get(), {0, 1}};
    } else if (auto gr = std::dynamic_pointer_cast<const GroupRing>(ring)) {
        if (gr->group().factors().size() == 1) {
            sym = "g";
            std::vector<Element> coeffs(gr->group().order(), gr->base().zero());
            if (gr->group().order() > 1) coeffs[1] = gr->base().one();
            else coeffs[0] = gr->base().one();
            gen = gr->from_coefficients(coeffs);
        }
    }

    Element result = ring->zero();
    std::size_t pos = 0;
    bool first = true;
    auto fail = [&](const std::string& expected) -> void {
        throw ParseError(pos, expected,
                         "element parse error at position " + std::to_string(pos) + " in '" +
                             s + "': expected " + expected);
    };
    while (pos < s.size()) {
        std::int64_t sign = 1;
        if (s[pos] == '+') {
            ++pos;
        } else if (s[pos] == '-') {
            sign = -1;
            ++pos;
        } else if (!first) {
            fail("'+' or '-'");
        }
        first = false;
        std::int64_t coeff = 1;
        bool have_coeff = false;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = (have_coeff ? coeff * 10 : 0) + (s[pos] - '0');
            have_coeff = true;
            ++pos;
        }
        if (pos < s.size() && s[pos] == '*') ++pos;
        std::uint64_t degree = 0;
        if (!sym.empty() && s.compare(pos, sym.size(), sym) == 0) {
            pos += sym.size();
            degree = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::int64_t e = 0;
                if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                    fail("exponent");
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                    e = e * 10 + (s[pos++] - '0');
                degree = static_cast<std::uint64_t>(e);
            }
        } else if (!have_coeff) {
            fail(sym.empty() ? "an integer" : "an integer or '" + sym + "'");
        }
        Element term = degree == 0 ? ring->one() : ring->pow(gen, degree);
        result = ring->add(result, ring->smul(sign * coeff, term));
    }
    return result;
}

std::vector<std::vector<Element>> parse_chain_spec(const RingPtr& ring,
                                                   const std::string& text) {
    std::vector<std::vector<Element>> out;
    for (const std::string& part : split_outside_brackets(text, ';')) {
        std::vector<Element> gens;
        for (const std::string& g : split_outside_brackets(part, ','))
            if (!strip(g).empty()) gens.push_back(parse_element(ring, g));
        out.push_back(std::move(gens));
    }
    return out;
}

}  // namespace rings
