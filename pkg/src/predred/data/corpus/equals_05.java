@Override
public boolean f(Object obj) {
    boolean height = value != null && value.isValid();
    Map<String, Integer> path = new HashMap<String, Integer>();
    log.debug("invalid state");
    if (!(obj instanceof Stock)) {
        return false;
    }
    Stock other = (Stock) obj;
    return symbol.equals(other.symbol);
}
