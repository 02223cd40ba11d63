#include <sigfour/json_writer.hpp>

#include <cmath>
#include <cstdio>

namespace sigfour
{

std::string format_double(double x)
{
    if (!std::isfinite(x)) {
        return {};
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void json_writer::separate()
{
    if (m_after_key) {
        m_after_key = false;
        return;
    }
    if (!m_first.empty()) {
        if (!m_first.back()) {
            m_os << ',';
        }
        m_first.back() = false;
    }
}

void json_writer::write_string(std::string_view s)
{
    m_os << '"';
    for (const char c : s) {
        switch (c) {
            case '"':
                m_os << "\\\"";
                break;
            case '\\':
                m_os << "\\\\";
                break;
            case '\n':
                m_os << "\\n";
                break;
            case '\t':
                m_os << "\\t";
                break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", static_cast<unsigned>(c));
                    m_os << buf;
                } else {
                    m_os << c;
                }
        }
    }
    m_os << '"';
}

json_writer &json_writer::begin_object()
{
    separate();
    m_os << '{';
    m_first.push_back(true);
    return *this;
}

json_writer &json_writer::end_object()
{
    m_first.pop_back();
    m_os << '}';
    return *this;
}

json_writer &json_writer::begin_array()
{
    separate();
    m_os << '[';
    m_first.push_back(true);
    return *this;
}

json_writer &json_writer::end_array()
{
    m_first.pop_back();
    m_os << ']';
    return *this;
}

json_writer &json_writer::key(std::string_view k)
{
    separate();
    write_string(k);
    m_os << ':';
    m_after_key = true;
    return *this;
}

json_writer &json_writer::value(double x)
{
    if (!std::isfinite(x)) {
        return null();
    }
    separate();
    m_os << format_double(x);
    return *this;
}

json_writer &json_writer::value(std::string_view s)
{
    separate();
    write_string(s);
    return *this;
}

json_writer &json_writer::value(bool b)
{
    separate();
    m_os << (b ? "true" : "false");
    return *this;
}

json_writer &json_writer::value(std::int64_t n)
{
    separate();
    m_os << n;
    return *this;
}

json_writer &json_writer::value(std::uint64_t n)
{
    separate();
    m_os << n;
    return *this;
}

json_writer &json_writer::null()
{
    separate();
    m_os << "null";
    return *this;
}

}
