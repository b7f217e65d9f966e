#include "skeinkit/pd_io.hpp"

#include <cctype>
#include <sstream>

namespace skeinkit {

std::string to_pd_text(const Diagram& d) {
    std::ostringstream os;
    os << "C:";
    for (const auto& comp : d.components) {
        os << " (";
        for (std::size_t i = 0; i < comp.size(); ++i) {
            if (i) os << ' ';
            os << comp[i];
        }
        os << ')';
    }
    os << '\n';
    for (const Crossing& c : d.crossings) {
        os << "X[" << c.slots[0] << ',' << c.slots[1] << ',' << c.slots[2] << ',' << c.slots[3]
           << "] " << (c.sign > 0 ? '+' : '-') << '\n';
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;
    int line;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    void skip_spaces() {
        while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
    }

    void expect(char c, const char* what) {
        if (done() || peek() != c) {
            std::ostringstream os;
            os << "expected '" << c << "' " << what;
            throw ParseError(line, os.str());
        }
        ++pos;
    }

    int read_int(const char* what) {
        skip_spaces();
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) {
            std::ostringstream os;
            os << "expected " << what;
            throw ParseError(line, os.str());
        }
        const std::string digits = s.substr(start, pos - start);
        if (digits.size() > 9) throw ParseError(line, "arc label out of range: " + digits);
        return std::stoi(digits);
    }
};

}  // namespace

Diagram parse_pd_text(const std::string& text) {
    Diagram d;
    bool saw_header = false;
    int max_arc = 0;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        Cursor cur{raw, 0, line_no};
        cur.skip_spaces();
        if (cur.done()) continue;

        if (cur.peek() == 'C') {
            if (saw_header) throw ParseError(line_no, "duplicate C: header");
            saw_header = true;
            ++cur.pos;
            cur.expect(':', "after C");
            cur.skip_spaces();
            while (!cur.done()) {
                cur.expect('(', "to open a component");
                std::vector<int> comp;
                cur.skip_spaces();
                while (!cur.done() && cur.peek() != ')') {
                    comp.push_back(cur.read_int("an arc label"));
                    cur.skip_spaces();
                }
                cur.expect(')', "to close a component");
                if (comp.empty()) throw ParseError(line_no, "empty component ()");
                for (int a : comp) max_arc = std::max(max_arc, a);
                d.components.push_back(std::move(comp));
                cur.skip_spaces();
            }
            continue;
        }

        if (cur.peek() == 'X') {
            ++cur.pos;
            cur.expect('[', "after X");
            Crossing c;
            for (int s = 0; s < 4; ++s) {
                c.slots[s] = cur.read_int("an arc label");
                max_arc = std::max(max_arc, c.slots[s]);
                cur.skip_spaces();
                if (s < 3) cur.expect(',', "between arc labels");
            }
            cur.expect(']', "after the four arc labels");
            cur.skip_spaces();
            if (cur.done() || (cur.peek() != '+' && cur.peek() != '-'))
                throw ParseError(line_no, "expected crossing sign + or -");
            c.sign = cur.peek() == '+' ? 1 : -1;
            ++cur.pos;
            cur.skip_spaces();
            if (!cur.done()) throw ParseError(line_no, "trailing text after crossing");
            d.crossings.push_back(c);
            continue;
        }

        throw ParseError(line_no, "expected a C: header or an X[...] crossing line");
    }

    if (!saw_header) throw ParseError(line_no, "missing C: component header");
    d.arc_count = max_arc;

    ValidationReport r = validate(d);
    if (!r.ok()) throw ParseError(line_no, "diagram fails validation: " + r.problems.front());
    return d;
}

}  // namespace skeinkit
