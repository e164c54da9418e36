#include "twistrb/report.hpp"

#include <sstream>

namespace twistrb {

void Report::add(std::string identity, std::vector<std::size_t> zero_based, Vector residual)
{
    for (auto& i : zero_based)
        ++i;
    failures_.push_back({std::move(identity), std::move(zero_based), std::move(residual)});
}

void Report::check(const std::string& identity, const std::vector<std::size_t>& zero_based, Vector residual)
{
    if (!is_zero(residual))
        add(identity, zero_based, std::move(residual));
}

void Report::merge(const Report& other, const std::string& prefix)
{
    for (auto f : other.failures_) {
        if (!prefix.empty())
            f.identity = prefix + f.identity;
        failures_.push_back(std::move(f));
    }
}

std::string Report::describe(std::size_t max_lines) const
{
    std::ostringstream out;
    std::size_t shown = 0;
    for (const auto& f : failures_) {
        if (shown++ == max_lines) {
            out << "... " << failures_.size() - max_lines << " more\n";
            break;
        }
        out << f.identity << " at (";
        for (std::size_t i = 0; i < f.indices.size(); ++i)
            out << (i ? "," : "") << f.indices[i];
        out << ") residual [";
        for (std::size_t i = 0; i < f.residual.size(); ++i)
            out << (i ? ", " : "") << format_rational(f.residual[i]);
        out << "]\n";
    }
    return out.str();
}

} // namespace twistrb
