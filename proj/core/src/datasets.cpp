#include "k3fib/datasets.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "k3fib/config_io.hpp"

namespace k3fib {

namespace {

constexpr const char* kR9 = R"(# I9 fibre with 3-torsion sections t1, t2
surface res
smoothbranch false
curve O -1
curve t1 -1
curve t2 -1
curve C0 -2
curve C1 -2
curve C2 -2
curve C3 -2
curve C4 -2
curve C5 -2
curve C6 -2
curve C7 -2
curve C8 -2
meet C0 C1 1
meet C1 C2 1
meet C2 C3 1
meet C3 C4 1
meet C4 C5 1
meet C5 C6 1
meet C6 C7 1
meet C7 C8 1
meet C8 C0 1
meet O C0 1
meet t1 C3 1
meet t2 C6 1
fibration fiber i9 C0 C1 C2 C3 C4 C5 C6 C7 C8
fibration section O t1 t2
fibration zero O
# elliptic involution
action iota (C1 C8)(C2 C7)(C3 C6)(C4 C5)(t1 t2) fix O C0
)";

constexpr const char* kR4 = R"(# I4* fibre with a 2-torsion section t1
surface res
smoothbranch false
curve O -1
curve t1 -1
curve C0 -2
curve C1 -2
curve C2 -2
curve C3 -2
curve C4 -2
curve C5 -2
curve C6 -2
curve C7 -2
curve C8 -2
meet C0 C2 1
meet C1 C2 1
meet C2 C3 1
meet C3 C4 1
meet C4 C5 1
meet C5 C6 1
meet C6 C7 1
meet C6 C8 1
meet O C0 1
meet t1 C8 1
fibration fiber i4* C0 C1 C2 C3 C4 C5 C6 C7 C8
fibration section O t1
fibration zero O
)";

constexpr const char* kR3 = R"(# III* and I2 (or III) fibres with a 2-torsion section t1
surface res
smoothbranch false
curve O -1
curve t1 -1
curve C0 -2
curve C1 -2
curve C2 -2
curve C3 -2
curve C4 -2
curve C5 -2
curve C6 -2
curve C7 -2
curve D0 -2
curve D1 -2
meet C0 C1 1
meet C1 C2 1
meet C2 C3 1
meet C3 C4 1
meet C4 C5 1
meet C5 C6 1
meet C3 C7 1
meet D0 D1 2
meet O C0 1
meet O D0 1
meet t1 C6 1
meet t1 D1 1
lift D0 Ph1
lift D1 Ph2
fibration fiber iii* C0 C1 C2 C3 C4 C5 C6 C7
fibration fiber i2 D0 D1
fibration section O t1
fibration zero O
)";

constexpr const char* kR2 = R"(# II* fibre, trivial Mordell-Weil group
surface res
smoothbranch false
curve O -1
curve C0 -2
curve C1 -2
curve C2 -2
curve C3 -2
curve C4 -2
curve C5 -2
curve C6 -2
curve C7 -2
curve C8 -2
meet C0 C1 1
meet C1 C2 1
meet C2 C3 1
meet C3 C4 1
meet C4 C5 1
meet C5 C6 1
meet C6 C7 1
meet C5 C8 1
meet O C0 1
fibration fiber ii* C0 C1 C2 C3 C4 C5 C6 C7 C8
fibration section O
fibration zero O
)";

constexpr const char* kX9Extra = R"(# fibre of the IV*+I3*+I3 fibration minus the two other triangle curves
derived M 1*Th6_2 2*T2 3*Th6_1 2*Th5_1 1*Th4_1 2*Th7_1 1*Th8_1 -1*Th1_1 -1*Th2_1
meet M Th1_1 1
meet M Th2_1 1
meet M Th7_2 1
meet M Th5_2 1
record 2i9 Th0_1 Th1_1 Th2_1 Th3_1 Th4_1 Th5_1 Th6_1 Th7_1 Th8_1
record 2i9 zero O
record ii*-i3* Th6_2 2*Th7_2 3*Th8_2 4*Th0_2 5*O 6*Th0_1 4*Th8_1 2*Th7_1 3*Th1_1
record ii*-i3* zero T2
record 2iii* Th5_1 2*Th6_1 3*T2 4*Th6_2 3*Th5_2 2*Th4_2 Th3_2 2*Th7_2
record 2iii* zero T1
record iii*-i9 Th0_1 2*Th8_1 3*Th7_1 4*Th6_1 3*Th5_1 2*Th4_1 Th3_1 2*T2
record iii*-i9 zero O
record i11* 2*M 2*O T1 2*T2 2*Th0_1 2*Th0_2 Th1_2 2*Th2_1 2*Th3_1 Th4_1 2*Th5_2 2*Th6_1 2*Th6_2 2*Th7_1 2*Th8_1 Th8_2
record i11* zero Th2_2
record i8*-i4 Th8_2 Th1_2 2*Th0_2 2*O 2*Th0_1 2*Th8_1 2*Th7_1 2*Th6_1 2*Th5_1 2*Th4_1 2*Th3_1 Th2_1 T1
record i8*-i4 zero Th7_2
record i16-tt Th0_1 Th1_1 Th2_1 Th3_1 T1 Th3_2 Th2_2 Th1_2 Th0_2 Th8_2 Th7_2 Th6_2 T2 Th6_1 Th7_1 Th8_1
record i16-tt zero Th4_1
record i5*-i7 Th5_1 T2 2*Th6_1 2*Th7_1 2*Th8_1 2*Th0_1 2*O 2*Th0_2 Th1_2 Th8_2
record i5*-i7 zero Th4_1
record iv*-i3*-i3 Th6_2 2*T2 3*Th6_1 2*Th5_1 Th4_1 2*Th7_1 Th8_1
record iv*-i3*-i3 zero Th0_1
record i2*-i10 Th8_1 Th1_1 2*Th0_1 2*O 2*Th0_2 Th8_2 Th1_2
record i2*-i10 zero Th7_1
record i16-a24 Th6_1 Th5_1 Th4_1 Th3_1 Th2_1 M Th5_2 Th4_2 Th3_2 Th2_2 Th1_2 Th0_2 O Th0_1 Th8_1 Th7_1
record i16-a24 zero T2
record i13-i4 T2 Th6_1 Th5_1 Th4_1 Th3_1 T1 Th3_2 Th2_2 Th1_2 Th0_2 Th8_2 Th7_2 Th6_2
record i13-i4 zero O
)";

constexpr const char* kX4Extra = R"(record ii*-i4* Th0_1 2*Th2_1 3*Th3_1 4*Th4_1 5*Th5_1 6*Th6_1 4*Th8_1 2*T1 3*Th7_1
record ii*-i4* zero O
record 2iii*-2i2 Th3_1 2*Th4_1 3*Th5_1 4*Th6_1 3*Th8_1 2*T1 Th8_2 2*Th7_1
record 2iii*-2i2 zero Th2_1
record i12* Th7_1 Th8_1 2*Th6_1 2*Th5_1 2*Th4_1 2*Th3_1 2*Th2_1 2*Th0_1 2*O 2*Th0_2 2*Th2_2 2*Th3_2 2*Th4_2 2*Th5_2 2*Th6_2 Th8_2 Th7_2
record i8*-i0* Th8_1 Th7_1 2*Th6_1 2*Th5_1 2*Th4_1 2*Th3_1 2*Th2_1 2*Th0_1 2*O 2*Th0_2 2*Th2_2 Th1_2 Th3_2
record i8*-i0* zero T1
record 2i4* Th0_1 Th1_1 2*Th2_1 2*Th3_1 2*Th4_1 2*Th5_1 2*Th6_1 Th7_1 Th8_1
record 2i4* zero O
record i16 Th8_1 Th6_1 Th5_1 Th4_1 Th3_1 Th2_1 Th0_1 O Th0_2 Th2_2 Th3_2 Th4_2 Th5_2 Th6_2 Th8_2 T1
record i16 zero Th1_1
)";

constexpr const char* kX3Extra = R"(record ii*-i4* Th0_2 2*O 3*Th0_1 4*Th1_1 5*Th2_1 6*Th3_1 4*Th4_1 2*Th5_1 3*Th7_1
record ii*-i4* zero Th1_2
record 2iii*-2i2 Th0_1 2*Th1_1 3*Th2_1 4*Th3_1 3*Th4_1 2*Th5_1 Th6_1 2*Th7_1
record 2iii*-2i2 zero O
record i12* Ph1_1 Ph1_2 2*O 2*Th0_1 2*Th1_1 2*Th2_1 2*Th3_1 2*Th4_1 2*Th5_1 2*Th6_1 2*T1 2*Th6_2 2*Th5_2 2*Th4_2 2*Th3_2 Th2_2 Th7_2
record i12* zero Th1_2
record i8*-i0* Th2_1 Th7_1 2*Th3_1 2*Th4_1 2*Th5_1 2*Th6_1 2*T1 2*Th6_2 2*Th5_2 2*Th4_2 2*Th3_2 Th2_2 Th7_2
record i8*-i0* zero Th1_2
record 2i4* Ph1_1 Th0_2 2*O 2*Th0_1 2*Th1_1 2*Th2_1 2*Th3_1 Th4_1 Th7_1
record 2i4* zero Th5_1
record i16 Th3_1 Th4_1 Th5_1 Th6_1 T1 Th6_2 Th5_2 Th4_2 Th3_2 Th2_2 Th1_2 Th0_2 O Th0_1 Th1_1 Th2_1
record i16 zero Th7_1
)";

constexpr const char* kX2Extra = R"(record 2ii* Th0_1 2*Th1_1 3*Th2_1 4*Th3_1 5*Th4_1 6*Th5_1 4*Th6_1 2*Th7_1 3*Th8_1
record 2ii* zero O
record i12* Th6_1 Th8_1 2*Th5_1 2*Th4_1 2*Th3_1 2*Th2_1 2*Th1_1 2*Th0_1 2*O 2*Th0_2 2*Th1_2 2*Th2_2 2*Th3_2 2*Th4_2 2*Th5_2 Th6_2 Th8_2
record i12* zero Th7_1
)";

constexpr const char* kWeierstrassEx1 = R"(# MW group Z/4Z, generated by a section over Q(sqrt 3)
sqrt 3
a4 -3*(t^2-3)*(t-2)^2
a6 t*(2*t^2-9)*(t-2)^3
point P | t^2-2*t | 0 | 2
point Q | (t-3)*(t-2) | 3*r*(t-2)^2 | 4
point -Q | (t-3)*(t-2) | -3*r*(t-2)^2 | 4
)";

constexpr const char* kWeierstrassR9Split = R"(# I9 surface with 3-torsion over Q
a4 -(432*t^3+10368)*t
a6 3456*t^6+124416*t^3+746496
point t1 | 12*t^2 | 864 | 3
point t2 | 12*t^2 | -864 | 3
)";

constexpr const char* kWeierstrassR9Galois = R"(# I9 surface with 3-torsion over Q(sqrt 3) only
sqrt 3
a4 -3*(t^3+24)*t
a6 2*(t^6+36*t^3+216)
point t1 | t^2 | 12*r | 3
point t2 | t^2 | -12*r | 3
# candidate section that does not lie on this model
point candidate | t^2-1 | 3*r*t | off
)";

constexpr const char* kWeierstrassQuartic = R"(# curve listed with Mordell-Weil group over Q(i, sqrt 3); no points recorded
a4 3*t^4+24*t
a6 2*t^6+40*t^3-16
)";

struct Entry {
    const char* name;
    const char* base;   // rational surface text
    const char* extra;  // appended to the double cover, or nullptr for the base itself
};

const std::vector<Entry>& curve_entries() {
    static const std::vector<Entry> e = {
        {"r2", kR2, nullptr},        {"r3", kR3, nullptr},        {"r4", kR4, nullptr},
        {"r9", kR9, nullptr},        {"x2", kR2, kX2Extra},       {"x3", kR3, kX3Extra},
        {"x4", kR4, kX4Extra},       {"x9", kR9, kX9Extra},
    };
    return e;
}

const std::vector<std::pair<const char*, const char*>>& weierstrass_entries() {
    static const std::vector<std::pair<const char*, const char*>> e = {
        {"weierstrass-ex1", kWeierstrassEx1},
        {"weierstrass-quartic", kWeierstrassQuartic},
        {"weierstrass-r9-galois", kWeierstrassR9Galois},
        {"weierstrass-r9-split", kWeierstrassR9Split},
    };
    return e;
}

[[noreturn]] void unknown(const std::string& name) {
    std::string known;
    for (const auto& n : dataset_names()) known += (known.empty() ? "" : ", ") + n;
    throw DomainError("unknown dataset '" + name + "'; known datasets: " + known);
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

CurveConfig build(const Entry& e) {
    CurveConfig c = parse_config(e.base);
    if (e.extra) c = parse_config(serialize_config(double_cover_config(c)) + e.extra);
    require_valid(c);
    return c;
}

}  // namespace

std::vector<std::string> dataset_names() {
    std::vector<std::string> out;
    for (const auto& e : curve_entries()) out.emplace_back(e.name);
    for (const auto& [n, text] : weierstrass_entries()) out.emplace_back(n);
    return out;
}

bool is_dataset(const std::string& name) {
    auto names = dataset_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

bool is_weierstrass_dataset(const std::string& name) {
    for (const auto& [n, text] : weierstrass_entries())
        if (name == n) return true;
    return false;
}

CurveConfig load_dataset(const std::string& name) {
    for (const auto& e : curve_entries())
        if (name == e.name) return build(e);
    if (is_weierstrass_dataset(name)) throw DomainError("dataset '" + name + "' is a Weierstrass example, not a curve configuration");
    unknown(name);
}

std::string dump_dataset(const std::string& name) {
    for (const auto& [n, text] : weierstrass_entries())
        if (name == n) return text;
    return serialize_config(load_dataset(name));
}

CurveConfig resolve_config(const std::string& name_or_path) {
    for (const auto& e : curve_entries())
        if (name_or_path == e.name) return build(e);
    if (!std::filesystem::exists(name_or_path))
        throw DomainError("'" + name_or_path + "' is neither a dataset name nor a readable file");
    CurveConfig c = load_config_file(name_or_path);
    require_valid(c);
    return c;
}

FFCurve WeierstrassExample::curve() const {
    return FFCurve(RatFunc(parse_poly(a4, sqrt_d)), RatFunc(parse_poly(a6, sqrt_d)));
}

FFPoint WeierstrassExample::point(const WeierstrassPoint& p) const {
    return FFPoint::affine(RatFunc(parse_poly(p.x, sqrt_d)), RatFunc(parse_poly(p.y, sqrt_d)));
}

WeierstrassExample parse_weierstrass_example(const std::string& name, const std::string& text) {
    WeierstrassExample ex;
    ex.name = name;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    auto fail = [&](const std::string& what) {
        throw DomainError(name + " line " + std::to_string(number) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++number;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        line = trim(line);
        if (line.empty()) continue;
        auto sp = line.find(' ');
        std::string kw = line.substr(0, sp), rest = sp == std::string::npos ? "" : trim(line.substr(sp));
        if (kw == "sqrt") {
            try {
                ex.sqrt_d = std::stol(rest);
            } catch (const std::exception&) {
                fail("bad sqrt value '" + rest + "'");
            }
            if (!is_squarefree(ex.sqrt_d)) fail("sqrt value must be square-free");
        } else if (kw == "a4") {
            ex.a4 = rest;
        } else if (kw == "a6") {
            ex.a6 = rest;
        } else if (kw == "point") {
            std::vector<std::string> f;
            std::istringstream fs(rest);
            std::string part;
            while (std::getline(fs, part, '|')) f.push_back(trim(part));
            if (f.size() != 4) fail("usage: point <name> | <x> | <y> | <order>|off");
            WeierstrassPoint p{f[0], f[1], f[2], std::nullopt};
            if (f[3] != "off") {
                try {
                    p.order = std::stoi(f[3]);
                } catch (const std::exception&) {
                    fail("bad order '" + f[3] + "'");
                }
            }
            ex.points.push_back(std::move(p));
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }
    if (ex.a4.empty() || ex.a6.empty()) throw DomainError(name + ": a4 and a6 are required");
    return ex;
}

WeierstrassExample weierstrass_example(const std::string& name) {
    for (const auto& [n, text] : weierstrass_entries())
        if (name == n) return parse_weierstrass_example(name, text);
    unknown(name);
}

}  // namespace k3fib
