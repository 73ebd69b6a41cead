#ifndef HLKAPPA_VERSION_HPP_
#define HLKAPPA_VERSION_HPP_

#define HLKAPPA_VERSION "1.0.0"

#endif  // HLKAPPA_VERSION_HPP_
