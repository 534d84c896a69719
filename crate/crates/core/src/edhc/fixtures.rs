//! Transcribed edge-disjoint Hamiltonian cycle listings for `SQ_4`, `SQ_5`
//! and `SQ_6`, one comma-separated closed walk per listing.

pub(crate) const SQ4: [&str; 2] = [
    "0000,0010,1010,1011, 1101,1111,0011,0001,0111, 0110, 1110,1100,0100,0101,1001,1000,0000",
    "0000,0100,0110,0010, 0011,0101,0111,1011,1001, 1111, 1110,1010,1000,1100,1101,0001,0000",
];

pub(crate) const SQ5: [&str; 2] = [
    "00000,00001,00011,00010, 00110,00100,00101,00111,01011, 01001,01000,01010,
     01110,01100,01101,01111,10011,10001,10111,10101,10100,10110,10010,11010,
     11011,11101,11100,11110,11111,11001,11000,10000,00000",
    "00000,00010,01010,01011, 01101,00001,00111,00110,01110, 01111, 00011,11111,
     11101,01001,00101,10001,10000,10010,10011,10101,11001,11011,10111,10110,
     11110,11010,11000,01000,01100,11100,10100,00100,00000",
];

// The second listing visits 101000 twice and never visits 110001.
pub(crate) const SQ6: [&str; 2] = [
    "000000,100000,110000,111000,111010,111011,111101,111100,111110,111111,111001,
     110101,110100,100100,100110,100111,101011,101101,101111,110011,110001,110111,
     110110,110010,101010,101110,101100,001100,001101,100101,101001,101000,001000,
     011000,011100,011101,011111,011110,011010,000010,000110,001110,001010,001011,
     001001,100001,100011,100010,010010,010011,001111,000011,000001,000111,011011,
     011001,010101,010111,010110,010100,010000,010001,000101,000100,000000",
    "000000,010000,110000,110100,111100,111000,111001,111011,110111,110101,110011,
     111111,111101,101000,100101,100111,100001,101101,101100,101000,101010,101011,
     101001,101111,100011,011011,011101,010001,010111,001011,001101,011001,011000,
     011010,010010,010110,100110,100010,100000,100100,000100,010100,011100,001100,
     001110,001111,001001,001000,001010,000010,110010,111010,111110,110110,101110,
     011110,000110,000111,000101,000011,011111,010011,010101,000001,000000",
];

pub(crate) fn listing(n: usize) -> Option<[&'static str; 2]> {
    match n {
        4 => Some(SQ4),
        5 => Some(SQ5),
        6 => Some(SQ6),
        _ => None,
    }
}

pub(crate) fn tokens(text: &str) -> Vec<&str> {
    text.split(',').map(str::trim).filter(|t| !t.is_empty()).collect()
}
