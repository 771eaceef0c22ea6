#pragma once

#include <sr/instance.hpp>
#include <sr/partition.hpp>

#include <string>
#include <vector>

namespace sr::test {

inline auto fixture_path(const std::string & name) -> std::string
{
    return std::string(SR_FIXTURE_DIR) + "/" + name;
}

inline auto fixture(const std::string & name) -> Instance
{
    return read_instance_file(fixture_path(name));
}

inline auto strings(const std::vector<Partition> & ps) -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (const auto & p : ps)
        out.push_back(p.to_string());
    return out;
}

inline auto strings(const std::vector<Cycle> & cs) -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (const auto & c : cs)
        out.push_back(c.to_string());
    return out;
}

} // namespace sr::test
