#include "dioquad/families.hpp"

#include "dioquad/errors.hpp"

#include <stdexcept>

namespace dioquad {

std::string family_name(Family f) {
    switch (f) {
        case Family::z2z2: return "z2z2";
        case Family::z2z2v: return "z2z2v";
        case Family::z2z4: return "z2z4";
        case Family::z2z6: return "z2z6";
        case Family::z2z8: return "z2z8";
    }
    throw std::logic_error("unknown family");
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::z2z2, Family::z2z2v, Family::z2z4, Family::z2z6, Family::z2z8}) {
        if (family_name(f) == name) {
            return f;
        }
    }
    throw std::invalid_argument("unknown family '" + name +
                                "' (expected z2z2, z2z2v, z2z4, z2z6 or z2z8)");
}

std::vector<std::string> family_parameters(Family f) {
    switch (f) {
        case Family::z2z2: return {"t", "a"};
        case Family::z2z2v: return {"t", "v"};
        case Family::z2z4: return {"t", "u"};
        case Family::z2z6: return {"k"};
        case Family::z2z8: return {"u", "v"};
    }
    throw std::logic_error("unknown family");
}

int advertised_k(Family f) {
    switch (f) {
        case Family::z2z2:
        case Family::z2z2v: return 1;
        case Family::z2z4: return 2;
        case Family::z2z6: return 3;
        case Family::z2z8: return 4;
    }
    throw std::logic_error("unknown family");
}

std::string c_mode_name(CMode m) { return m == CMode::regular ? "regular" : "prop3"; }

CMode parse_c_mode(const std::string& name) {
    if (name == "regular") {
        return CMode::regular;
    }
    if (name == "prop3") {
        return CMode::prop3;
    }
    throw std::invalid_argument("unknown c-mode '" + name + "' (expected regular or prop3)");
}

const Rat& FamilyParams::at(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end()) {
        throw std::invalid_argument("missing parameter '" + name + "' for family " +
                                    family_name(family));
    }
    return it->second;
}

namespace {

void require_nonzero(const Rat& value, const char* factor) {
    if (value.is_zero()) {
        throw DegenerateError(factor);
    }
}

// Elements must be nonzero and pairwise distinct; names follow a, b, c, d.
void require_distinct_nonzero(const std::array<Rat, 4>& e) {
    static const char* const names[] = {"a", "b", "c", "d"};
    for (std::size_t i = 0; i < 4; ++i) {
        require_nonzero(e[i], names[i]);
        for (std::size_t j = 0; j < i; ++j) {
            if (e[i] == e[j]) {
                const std::string f = std::string(names[j]) + "-" + names[i];
                throw DegenerateError(f, "degenerate parameters: " + f + " vanishes (" +
                                             e[i].to_string() + " repeated)");
            }
        }
    }
}

FamilyOutput finish(std::array<Rat, 4> e, FamilyParams params) {
    require_distinct_nonzero(e);
    const int k = advertised_k(params.family);
    return FamilyOutput{Quadruple::make(e), std::move(params), k};
}

}  // namespace

FamilyOutput family_z2z2(const Rat& t, const Rat& a) {
    require_nonzero(t, "t");
    require_nonzero(a, "a");
    const Rat t2 = t * t;
    const Rat at = a * t;
    const Rat b1 = t2 - Rat(2) * at - Rat(4) * t + Rat(3);
    const Rat b2 = t2 - Rat(2) * at + Rat(4) * t + Rat(3);
    const Rat c1 = t2 + Rat(2) * at + Rat(4) * t + Rat(3);
    const Rat c2 = t2 + Rat(2) * at - Rat(4) * t + Rat(3);
    require_nonzero(b1, "t^2-2at-4t+3");
    require_nonzero(b2, "t^2-2at+4t+3");
    require_nonzero(c1, "t^2+2at+4t+3");
    require_nonzero(c2, "t^2+2at-4t+3");
    require_nonzero(t - Rat(1), "t-1");
    require_nonzero(t + Rat(3), "t+3");
    require_nonzero(t - Rat(3), "t-3");
    require_nonzero(t + Rat(1), "t+1");

    const Rat den = Rat(16) * t2 * a;
    const Rat b = b1 * b2 / den;
    const Rat c = c1 * c2 / den;
    const Rat d = (t - Rat(1)) * (t + Rat(3)) * (t - Rat(3)) * (t + Rat(1)) / (Rat(4) * t2 * a);
    return finish({a, b, c, d}, FamilyParams{Family::z2z2, {{"t", t}, {"a", a}}, CMode::regular});
}

FamilyOutput family_z2z2_v(const Rat& t, const Rat& v) {
    require_nonzero(v, "v");
    require_nonzero(v - Rat(1), "v-1");
    require_nonzero(v + Rat(1), "v+1");
    FamilyOutput out = family_z2z2(t, (v * v - Rat(1)) / (Rat(2) * v));
    out.params = FamilyParams{Family::z2z2v, {{"t", t}, {"v", v}}, CMode::regular};
    return out;
}

std::vector<std::array<Rat, 3>> z2z2_b1_factors(const Rat& a) {
    const Rat a2 = Rat(2) * a;
    const Rat a6 = Rat(6) * a;
    return {
        {Rat(1), a2, Rat(-1)},  {Rat(1), -a6, Rat(-9)}, {Rat(3), a2, Rat(-3)},
        {Rat(1), -a2, Rat(-9)}, {Rat(1), a6, Rat(-9)},  {Rat(1), -a2, Rat(-1)},
        {Rat(1), a2, Rat(-9)},  {Rat(3), -a2, Rat(-3)},
    };
}

CurveCoefficients z2z2_curve_coeffs(const Rat& t, const Rat& a) {
    require_nonzero(t, "t");
    require_nonzero(a, "a");
    const Rat t2 = t * t;
    const Rat t4 = t2 * t2;
    const Rat t6 = t4 * t2;
    const Rat t8 = t4 * t4;
    const Rat a2 = a * a;
    const Rat a4 = a2 * a2;
    const Rat A1 = Rat(6) * t8 - Rat(48) * t6 * a2 + Rat(96) * t4 * a4 - Rat(120) * t6 +
                   Rat(992) * t4 * a2 + Rat(708) * t4 - Rat(432) * t2 * a2 - Rat(1080) * t2 +
                   Rat(486);
    Rat B1(1);
    for (const auto& f : z2z2_b1_factors(a)) {
        B1 *= f[0] * t2 + f[1] * t + f[2];
    }
    return {A1, B1};
}

FamilyOutput family_z2z4(const Rat& t, const Rat& u, CMode mode) {
    require_nonzero(t - u, "t-u");
    require_nonzero(u * t + Rat(1), "ut+1");
    require_nonzero(t, "t");
    require_nonzero(u, "u");
    const Rat a = (u * t + Rat(1)) / (t - u);
    const Rat b = Rat(4) * t * u / ((t * u + Rat(1)) * (t - u));
    const Rat d = -(t - u) / (u * t + Rat(1));
    Rat c;
    if (mode == CMode::regular) {
        require_nonzero(u - Rat(1), "u-1");
        require_nonzero(u + Rat(1), "u+1");
        require_nonzero(t - Rat(1), "t-1");
        require_nonzero(t + Rat(1), "t+1");
        c = (u - Rat(1)) * (u + Rat(1)) * (t - Rat(1)) * (t + Rat(1)) / ((u * t + Rat(1)) * (t - u));
    } else {
        const Rat q = a * a + b * b + d * d - Rat(2) * (a * b + a * d + b * d);
        require_nonzero(q, "a^2+b^2+d^2-2ab-2ad-2bd");
        require_nonzero(d - a - b, "d-a-b");
        require_nonzero(a + d - b, "a+d-b");
        require_nonzero(b + d - a, "b+d-a");
        c = Rat(8) * (d - a - b) * (a + d - b) * (b + d - a) / (q * q);
    }
    return finish({a, b, c, d}, FamilyParams{Family::z2z4, {{"t", t}, {"u", u}}, mode});
}

namespace {

void z2z6_guards(const Rat& k) {
    const Rat k2 = k * k;
    const Rat k3 = k2 * k;
    require_nonzero(k, "k");
    require_nonzero(k - Rat(1), "k-1");
    require_nonzero(k + Rat(1), "k+1");
    // The next four have no rational roots; checked for completeness.
    require_nonzero(Rat(2) * k2 + Rat(1), "2k^2+1");
    require_nonzero(k2 + Rat(2), "k^2+2");
    require_nonzero(Rat(2) * k2 + k + Rat(2), "2k^2+k+2");
    require_nonzero(k2 - k + Rat(1), "k^2-k+1");
    require_nonzero(Rat(3) * k3 - Rat(2) * k2 + Rat(2) * k - Rat(2), "3k^3-2k^2+2k-2");
    require_nonzero(Rat(4) * k2 - k + Rat(4), "4k^2-k+4");
    require_nonzero(Rat(2) * k3 - Rat(2) * k2 + Rat(2) * k - Rat(3), "2k^3-2k^2+2k-3");
}

}  // namespace

Z2z6Chain z2z6_chain(const Rat& k) {
    z2z6_guards(k);
    const Rat k2 = k * k;
    Z2z6Chain ch;
    ch.t3 = -(Rat(2) * k2 + Rat(1)) / (k * (k2 + Rat(2)));
    ch.m = Rat(3) * k * (k2 * k - Rat(2) * k2 + k - Rat(2)) /
           (Rat(2) * (Rat(2) * k2 + Rat(1)) * (k2 - k + Rat(1)));
    ch.t2 = ch.m - reciprocal(ch.t3);
    require_nonzero(ch.t2, "t2");
    ch.t1 = k / (ch.t2 * ch.t3);
    const Rat &t1 = ch.t1, &t2 = ch.t2, &t3 = ch.t3;
    const Rat p = t1 * t2 * t3;
    const Rat den = (p - Rat(1)) * (p + Rat(1));
    ch.elements[0] = Rat(2) * t1 * (Rat(1) + t1 * t2 * (Rat(1) + t2 * t3)) / den;
    ch.elements[1] = Rat(2) * t2 * (Rat(1) + t2 * t3 * (Rat(1) + t3 * t1)) / den;
    ch.elements[2] = Rat(2) * t3 * (Rat(1) + t3 * t1 * (Rat(1) + t1 * t2)) / den;
    ch.elements[3] = Rat(-2) * (Rat(1) - t1 + t3 * t1) * (-t3 + t2 * t3 + Rat(1)) *
                     (-t2 + Rat(1) + t1 * t2) * (p - Rat(1)) / pow(p + Rat(1), 3);
    return ch;
}

FamilyOutput family_z2z6(const Rat& k) {
    z2z6_guards(k);
    const Rat k2 = k * k;
    const Rat k3 = k2 * k;
    const Rat f_2k2p1 = Rat(2) * k2 + Rat(1);
    const Rat f_k2p2 = k2 + Rat(2);
    const Rat f_2k2pkp2 = Rat(2) * k2 + k + Rat(2);
    const Rat f_k2mkp1 = k2 - k + Rat(1);
    const Rat kp1 = k + Rat(1);
    const Rat km1 = k - Rat(1);

    const Rat a = Rat(-2) * k * f_k2p2 * (Rat(3) * k3 - Rat(2) * k2 + Rat(2) * k - Rat(2)) /
                  (kp1 * km1 * f_2k2p1 * f_2k2pkp2);
    const Rat b = -k * kp1 * km1 * f_2k2pkp2 * (Rat(4) * k2 - k + Rat(4)) /
                  (Rat(2) * f_k2p2 * f_k2mkp1 * f_k2mkp1 * f_2k2p1);
    const Rat c = Rat(2) * f_2k2p1 * (Rat(2) * k3 - Rat(2) * k2 + Rat(2) * k - Rat(3)) /
                  (kp1 * km1 * f_2k2pkp2 * f_k2p2);
    const Rat d = f_2k2p1 * kp1 * f_k2p2 * km1 / (Rat(2) * f_k2mkp1 * f_k2mkp1 * f_2k2pkp2);
    return finish({a, b, c, d}, FamilyParams{Family::z2z6, {{"k", k}}, CMode::regular});
}

FamilyOutput family_z2z8(const Rat& u, const Rat& v) {
    const Rat u2 = u * u;
    const Rat uv = u * v;
    const Rat w = Rat(-2) * u2 * v - Rat(2) * v + v * v * u + u2 * u + u;
    const Rat s = u2 + Rat(1) - v * v;
    require_nonzero(u, "u");
    require_nonzero(v, "v");
    require_nonzero(u + Rat(1), "u+1");
    require_nonzero(u - Rat(1), "u-1");
    require_nonzero(-uv + v + Rat(1) + u2, "-uv+v+1+u^2");
    require_nonzero(-uv + Rat(1) + u2, "-uv+1+u^2");
    require_nonzero(-uv - v + Rat(1) + u2, "-uv-v+1+u^2");
    require_nonzero(u - v + Rat(1), "u-v+1");
    require_nonzero(u - v, "u-v");
    require_nonzero(u - v - Rat(1), "u-v-1");
    require_nonzero(s, "u^2+1-v^2");
    require_nonzero(w, "-2u^2v-2v+v^2u+u^3+u");
    require_nonzero(w - s, "-2u^2v-2v+v^2u+u^3+u-u^2-1+v^2");
    require_nonzero(w + s, "-2u^2v-2v+v^2u+u^3+u+u^2+1-v^2");

    const Rat umv = u - v;
    const Rat n3 = (umv + Rat(1)) * (umv - Rat(1));
    const Rat q = (u2 + Rat(1)) * (u2 + Rat(1));
    const Rat a = n3 / (Rat(2) * umv);
    const Rat b = Rat(-2) * s * u * w / (q * umv * n3);
    const Rat c = (w - s) * (w + s) * (u + Rat(1)) * (u - Rat(1)) / (Rat(2) * q * umv * n3);
    const Rat d = Rat(-2) * umv / n3;
    return finish({a, b, c, d}, FamilyParams{Family::z2z8, {{"u", u}, {"v", v}}, CMode::regular});
}

Rat z2z8_T(const Rat& u, const Rat& v) {
    const Rat den = v * u - u * u - Rat(1);
    require_nonzero(den, "vu-u^2-1");
    const Rat T = v / den;
    require_nonzero(T, "v");
    require_nonzero(T - Rat(1), "T-1");
    require_nonzero(T + Rat(1), "T+1");
    return T;
}

FamilyOutput evaluate_family(const FamilyParams& params) {
    switch (params.family) {
        case Family::z2z2: return family_z2z2(params.at("t"), params.at("a"));
        case Family::z2z2v: return family_z2z2_v(params.at("t"), params.at("v"));
        case Family::z2z4: return family_z2z4(params.at("t"), params.at("u"), params.c_mode);
        case Family::z2z6: return family_z2z6(params.at("k"));
        case Family::z2z8: return family_z2z8(params.at("u"), params.at("v"));
    }
    throw std::logic_error("unknown family");
}

}  // namespace dioquad
