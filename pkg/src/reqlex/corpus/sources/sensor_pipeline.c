/* io: inputs=4 outputs=4 */
#include <stdio.h>
int clamp(int value, int low, int high)
{
    if (value < low)
        return low;
    if (value > high)
        return high;
    return value;
}
int scale(int value, int factor)
{
    int scaled;
    scaled = value * factor;
    if (scaled > 10000)
        scaled = 10000;
    return scaled;
}
int main()
{
    int count, i, raw, cooked, total, peak;
    scanf("%d", &count);
    if (count > 100)
        count = 100;
    total = 0;
    peak = 0;
    i = 0;
    while (i < count)
    {
        scanf("%d", &raw);
        cooked = clamp(raw, 0, 100);
        cooked = scale(cooked, 3);
        if (cooked > peak)
        {
            if (cooked > 9000)
                printf("near cap\n");
            peak = cooked;
        }
        total = total + cooked;
        i = i + 1;
    }
    printf("total %d\n", total);
    printf("peak %d\n", peak);
    printf("count %d\n", count);
    return 0;
}
